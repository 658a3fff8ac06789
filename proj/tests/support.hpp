#pragma once

// Test-only helpers: seeded random inputs and oracles that do not go
// through the code paths they check.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gbkit/groebner.hpp"
#include "gbkit/parse.hpp"
#include "gbkit/ring.hpp"

namespace gbkit::testing {

inline VariableContext vars(const std::string& list) { return VariableContext::parse_list(list); }

inline Polynomial poly(const std::string& text, const VariableContext& ctx) { return parse_polynomial(text, ctx); }

inline std::vector<Polynomial> polys(std::initializer_list<const char*> texts, const VariableContext& ctx) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ctx));
  return out;
}

inline Rational random_rational(std::mt19937& rng, int max_num = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational::normalize(num(rng), den(rng));
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t arity, unsigned max_degree) {
  std::vector<Monomial::Exponent> e(arity, 0);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, arity - 1);
  const unsigned d = deg(rng);
  for (unsigned i = 0; i < d; ++i) ++e[var(rng)];
  return Monomial(std::move(e));
}

/// Up to `max_terms` random terms of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937& rng, const VariableContext& ctx, unsigned max_degree,
                                    int max_terms = 4) {
  std::uniform_int_distribution<int> count(1, max_terms);
  Polynomial p(ctx);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p.add_term(random_rational(rng), random_monomial(rng, ctx.size(), max_degree));
  return p;
}

inline Polynomial random_nonzero_polynomial(std::mt19937& rng, const VariableContext& ctx, unsigned max_degree,
                                            int max_terms = 4) {
  while (true) {
    Polynomial p = random_polynomial(rng, ctx, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline MonomialOrder random_order(std::mt19937& rng) {
  static constexpr MonomialOrder all[] = {MonomialOrder::lex, MonomialOrder::grlex, MonomialOrder::grevlex};
  return all[std::uniform_int_distribution<int>(0, 2)(rng)];
}

/// Every S-polynomial of the basis reduces to zero modulo the basis.
inline bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, MonomialOrder order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  }
  return true;
}

/// Canonical strings of a basis, sorted, for set comparison.
inline std::vector<std::string> canonical_set(std::span<const Polynomial> basis, MonomialOrder order) {
  std::vector<std::string> out;
  for (const auto& g : basis) out.push_back(format_polynomial(g, order));
  std::sort(out.begin(), out.end());
  return out;
}

/// Closed-form two-link IK by the law of cosines. Returns the elbow branches
/// (theta1, theta2); both when they differ, one at the annulus boundary,
/// none when unreachable.
inline std::vector<std::pair<double, double>> law_of_cosines_ik(double l1, double l2, double x, double y,
                                                                double tol) {
  const double c2 = (x * x + y * y - l1 * l1 - l2 * l2) / (2 * l1 * l2);
  if (c2 > 1 + tol || c2 < -1 - tol) return {};
  const double base = std::acos(std::clamp(c2, -1.0, 1.0));
  std::vector<std::pair<double, double>> out;
  for (double theta2 : {base, -base}) {
    const double theta1 = std::atan2(y, x) - std::atan2(l2 * std::sin(theta2), l1 + l2 * std::cos(theta2));
    double t1 = std::remainder(theta1, 2 * std::numbers::pi);
    if (t1 <= -std::numbers::pi) t1 += 2 * std::numbers::pi;
    out.emplace_back(t1, theta2);
    if (base < tol) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double angle_gap(double a, double b) {
  return std::abs(std::remainder(a - b, 2 * std::numbers::pi));
}

}  // namespace gbkit::testing
