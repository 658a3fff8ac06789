#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gbkit/cli.hpp"
#include "gbkit/division.hpp"
#include "gbkit/groebner.hpp"
#include "gbkit/ideal.hpp"
#include "gbkit/kinematics.hpp"
#include "gbkit/oscillator.hpp"
#include "gbkit/parse.hpp"

namespace py = pybind11;
using namespace gbkit;

namespace {

// Variables come either as "x,y,z" or as a list of names.
using Vars = std::variant<std::string, std::vector<std::string>>;

VariableContext context_of(const Vars& vars) {
  if (const auto* s = std::get_if<std::string>(&vars)) return VariableContext::parse_list(*s);
  return VariableContext(std::get<std::vector<std::string>>(vars));
}

MonomialOrder order_of(const std::string& name) {
  const auto order = parse_order(name);
  if (!order) throw std::invalid_argument("unknown order '" + name + "'");
  return *order;
}

std::vector<std::string> format_all(std::span<const Polynomial> polys, MonomialOrder order) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(format_polynomial(p, order));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Groebner bases over the rationals, with 2R inverse kinematics and damped oscillators";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "normalize",
      [](const std::string& polynomial, const Vars& vars, const std::string& order) {
        return format_polynomial(parse_polynomial(polynomial, context_of(vars)), order_of(order));
      },
      py::arg("polynomial"), py::arg("vars"), py::arg("order") = "grevlex",
      "Canonical text form of a polynomial.");

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& polys, const Vars& vars, const std::string& order, bool reduce,
         bool coprime_criterion) {
        const auto ctx = context_of(vars);
        const auto o = order_of(order);
        BuchbergerOptions options;
        options.coprime_criterion = coprime_criterion;
        GroebnerBasis basis = buchberger(parse_system(polys, ctx), o, options);
        if (reduce) basis = reduce_basis(basis);
        return format_all(basis.generators(), o);
      },
      py::arg("polys"), py::arg("vars"), py::arg("order") = "grevlex", py::arg("reduce") = true,
      py::arg("coprime_criterion") = true);

  m.def(
      "s_polynomial",
      [](const std::string& p, const std::string& q, const Vars& vars, const std::string& order) {
        const auto ctx = context_of(vars);
        const auto o = order_of(order);
        return format_polynomial(s_polynomial(parse_polynomial(p, ctx), parse_polynomial(q, ctx), o), o);
      },
      py::arg("p"), py::arg("q"), py::arg("vars"), py::arg("order") = "grevlex");

  m.def(
      "divide",
      [](const std::string& f, const std::vector<std::string>& divisors, const Vars& vars,
         const std::string& order) {
        const auto ctx = context_of(vars);
        const auto o = order_of(order);
        const auto r = divide(parse_polynomial(f, ctx), parse_system(divisors, ctx), o);
        return py::make_tuple(format_all(r.quotients, o), format_polynomial(r.remainder, o));
      },
      py::arg("f"), py::arg("divisors"), py::arg("vars"), py::arg("order") = "grevlex",
      "Returns (quotients, remainder).");

  m.def(
      "normal_form",
      [](const std::string& f, const std::vector<std::string>& basis, const Vars& vars,
         const std::string& order) {
        const auto ctx = context_of(vars);
        const auto o = order_of(order);
        return format_polynomial(normal_form(parse_polynomial(f, ctx), parse_system(basis, ctx), o), o);
      },
      py::arg("f"), py::arg("basis"), py::arg("vars"), py::arg("order") = "grevlex");

  m.def(
      "is_member",
      [](const std::string& f, const std::vector<std::string>& generators, const Vars& vars,
         const std::string& order) {
        const auto ctx = context_of(vars);
        const auto basis = reduced_groebner_basis(parse_system(generators, ctx), order_of(order));
        return is_member(parse_polynomial(f, ctx), basis);
      },
      py::arg("f"), py::arg("generators"), py::arg("vars"), py::arg("order") = "grevlex");

  m.def(
      "eliminate",
      [](const std::vector<std::string>& polys, const Vars& vars, std::size_t keep) {
        const auto ctx = context_of(vars);
        const auto basis = reduced_groebner_basis(parse_system(polys, ctx), MonomialOrder::lex);
        return format_all(eliminate(basis, keep), MonomialOrder::lex);
      },
      py::arg("polys"), py::arg("vars"), py::arg("keep"),
      "Reduced lex basis members in the last `keep` variables.");

  m.def(
      "staircase",
      [](const std::vector<std::string>& polys, const Vars& vars, const std::string& order) {
        const auto ctx = context_of(vars);
        return staircase(reduced_groebner_basis(parse_system(polys, ctx), order_of(order))).minimal_generators;
      },
      py::arg("polys"), py::arg("vars"), py::arg("order") = "grevlex",
      "Minimal generators (a, b) of the leading-term ideal.");

  m.def(
      "univariate_real_roots",
      [](const std::string& p, const Vars& vars, double tol) {
        return univariate_real_roots(parse_polynomial(p, context_of(vars)), tol);
      },
      py::arg("p"), py::arg("vars"), py::arg("tol") = 1e-9);

  m.def(
      "ik_solve",
      [](double l1, double l2, double x, double y, double tol) {
        const auto r = kinematics::ik_solve({l1, l2}, {x, y}, tol);
        py::list solutions;
        for (const auto& s : r.solutions) solutions.append(py::make_tuple(s.theta1, s.theta2, s.residual));
        py::dict d;
        d["solutions"] = solutions;
        d["unreachable"] = r.unreachable;
        d["diagnostic"] = r.diagnostic;
        return d;
      },
      py::arg("l1"), py::arg("l2"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9,
      "Two-link planar arm inverse kinematics; solutions are (theta1, theta2, residual).");

  m.def(
      "classify",
      [](double mass, double k, double b) { return std::string(oscillator::to_string(oscillator::classify(mass, k, b))); },
      py::arg("m"), py::arg("k"), py::arg("b"));

  m.def(
      "solve_ivp",
      [](double mass, double k, double b, double y0, double y1) {
        const auto s = oscillator::solve_ivp({mass, k, b, y0, y1});
        py::dict d;
        d["omega"] = s.omega;
        d["beta"] = s.beta;
        d["amplitude"] = s.amplitude;
        d["phase"] = s.phase;
        d["c1"] = s.c1;
        d["c2"] = s.c2;
        return d;
      },
      py::arg("m"), py::arg("k"), py::arg("b"), py::arg("y0"), py::arg("y1"));

  m.def(
      "sample",
      [](double mass, double k, double b, double y0, double y1, double t_end, int n) {
        const auto s = oscillator::solve_ivp({mass, k, b, y0, y1});
        std::vector<std::tuple<double, double, double, double>> rows;
        for (const auto& r : oscillator::sample(s, t_end, n)) rows.emplace_back(r.t, r.y, r.env_hi, r.env_lo);
        return rows;
      },
      py::arg("m"), py::arg("k"), py::arg("b"), py::arg("y0"), py::arg("y1"), py::arg("t_end"), py::arg("n"),
      "Rows (t, y, env_hi, env_lo).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line driver in-process; returns (exit_code, stdout, stderr).");
}
