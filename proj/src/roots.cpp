#include "gbkit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gbkit {

namespace {

// Relative size of |p(x)| below which a critical point counts as a root.
constexpr double kTangentTolerance = 1e-10;

double horner(std::span<const double> c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

double magnitude_scale(std::span<const double> c, double x) {
  double s = 0.0, power = 1.0;
  const double ax = std::abs(x);
  for (double ci : c) {
    s += std::abs(ci) * power;
    power *= ax;
  }
  return s;
}

int sign_of(double v) { return (v > 0) - (v < 0); }

double bisect(std::span<const double> c, double lo, double hi, int sign_lo) {
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(horner(c, mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

// All real roots (with repetition possible) of a polynomial whose leading
// coefficient is nonzero, searched on [-bound, bound].
std::vector<double> roots_in(std::span<const double> c, double bound) {
  const std::size_t degree = c.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {-c[0] / c[1]};

  std::vector<double> derivative(degree);
  for (std::size_t i = 1; i <= degree; ++i) derivative[i - 1] = c[i] * static_cast<double>(i);
  std::vector<double> critical = roots_in(derivative, bound);
  std::sort(critical.begin(), critical.end());

  std::vector<double> breaks{-bound};
  for (double x : critical) {
    if (x > breaks.back() && x < bound) breaks.push_back(x);
  }
  breaks.push_back(bound);

  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double a = breaks[k], b = breaks[k + 1];
    const int sa = sign_of(horner(c, a));
    const int sb = sign_of(horner(c, b));
    if (sa == 0) out.push_back(a);
    if (sa != 0 && sb != 0 && sa != sb) out.push_back(bisect(c, a, b, sa));
  }
  if (sign_of(horner(c, bound)) == 0) out.push_back(bound);
  for (double x : critical) {
    if (std::abs(horner(c, x)) <= kTangentTolerance * magnitude_scale(c, x)) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<double> real_roots(std::span<const double> coefficients, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  std::size_t n = coefficients.size();
  while (n > 0 && coefficients[n - 1] == 0.0) --n;
  if (n == 0) throw std::domain_error("identically zero");
  const auto c = coefficients.first(n);

  double max_ratio = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) max_ratio = std::max(max_ratio, std::abs(c[i] / c[n - 1]));
  const double bound = 1.0 + max_ratio;

  std::vector<double> raw = roots_in(c, bound);
  std::sort(raw.begin(), raw.end());

  // Merge clusters closer than tol, reporting the cluster midpoint.
  std::vector<double> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t j = i;
    while (j + 1 < raw.size() && raw[j + 1] - raw[j] < tol) ++j;
    out.push_back(raw[i] + (raw[j] - raw[i]) / 2);
    i = j + 1;
  }
  return out;
}

}  // namespace gbkit
