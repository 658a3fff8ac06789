#pragma once

#include <span>
#include <vector>

namespace gbkit {

/// Real roots of a univariate polynomial with floating-point coefficients,
/// `coefficients[i]` multiplying x^i.
///
/// Roots are bracketed between consecutive critical points (found
/// recursively from the derivative) inside the Cauchy bound
/// B = 1 + max|c_i / c_lead| and refined by bisection to machine precision.
/// A critical point where |p| is negligible relative to the evaluation scale
/// is reported as a tangential root. Roots closer than `tol` are merged into
/// their midpoint. Output ascending; empty for a nonzero constant.
///
/// Throws std::domain_error("identically zero") if all coefficients are
/// zero and std::invalid_argument if tol <= 0.
std::vector<double> real_roots(std::span<const double> coefficients, double tol);

}  // namespace gbkit
