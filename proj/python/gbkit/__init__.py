"""Exact Groebner bases over the rationals, plus the 2R inverse-kinematics
and damped-oscillator applications built on them."""

from ._core import (
    ParseError,
    classify,
    divide,
    eliminate,
    groebner_basis,
    ik_solve,
    is_member,
    normal_form,
    normalize,
    run_cli,
    s_polynomial,
    sample,
    solve_ivp,
    staircase,
    univariate_real_roots,
)

__all__ = [
    "ParseError",
    "classify",
    "divide",
    "eliminate",
    "groebner_basis",
    "ik_solve",
    "is_member",
    "normal_form",
    "normalize",
    "run_cli",
    "s_polynomial",
    "sample",
    "solve_ivp",
    "staircase",
    "univariate_real_roots",
]
