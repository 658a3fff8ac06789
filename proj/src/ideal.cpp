#include "gbkit/ideal.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "gbkit/roots.hpp"

namespace gbkit {

namespace {

// Dense univariate polynomial, coefficient i multiplies x^i, no trailing
// zeros (empty == 0).
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  if (a.size() < b.size()) return {Dense{}, std::move(a)};
  Dense q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational factor = a[k + b.size() - 1] / b.back();
    q[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= factor * b[j];
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

Dense gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_member(const Polynomial& f, const GroebnerBasis& basis) {
  if (!(f.context() == basis.context())) throw std::invalid_argument("ring mismatch");
  return normal_form(f, basis.generators(), basis.order()).is_zero();
}

std::vector<Polynomial> eliminate(const GroebnerBasis& basis, std::size_t keep_count) {
  if (basis.order() != MonomialOrder::lex) throw std::invalid_argument("elimination requires lex");
  const std::size_t n = basis.context().size();
  if (keep_count < 1 || keep_count > n) {
    throw std::invalid_argument("keep count must be between 1 and the number of variables");
  }
  const std::size_t dropped = n - keep_count;
  std::vector<Polynomial> out;
  for (const auto& g : basis.generators()) {
    bool only_kept = true;
    for (std::size_t v = 0; v < dropped && only_kept; ++v) only_kept = !g.uses_variable(v);
    if (only_kept) out.push_back(g);
  }
  return out;
}

bool StaircaseDiagram::contains(std::uint32_t u, std::uint32_t v) const {
  return std::any_of(minimal_generators.begin(), minimal_generators.end(),
                     [&](const Corner& g) { return g.first <= u && g.second <= v; });
}

StaircaseDiagram staircase_of(std::span<const Monomial> monomials) {
  std::vector<StaircaseDiagram::Corner> corners;
  for (const auto& m : monomials) {
    if (m.arity() != 2) throw std::invalid_argument("staircase supports 2 variables");
    corners.emplace_back(m[0], m[1]);
  }
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());

  // Sorted by (a, b): a corner survives iff its b is below every b seen so far.
  StaircaseDiagram d;
  for (const auto& c : corners) {
    if (d.minimal_generators.empty() || c.second < d.minimal_generators.back().second) {
      d.minimal_generators.push_back(c);
    }
  }
  std::uint32_t max_a = 0, max_b = 0;
  for (const auto& [a, b] : d.minimal_generators) {
    max_a = std::max(max_a, a);
    max_b = std::max(max_b, b);
  }
  d.width = max_a + 2;
  d.height = max_b + 2;
  return d;
}

StaircaseDiagram staircase(const GroebnerBasis& basis) {
  if (basis.context().size() != 2) throw std::invalid_argument("staircase supports 2 variables");
  std::vector<Monomial> leads;
  for (const auto& g : basis.generators()) leads.push_back(leading_monomial(g, basis.order()));
  return staircase_of(leads);
}

std::vector<double> univariate_real_roots(const Polynomial& p, double tol) {
  if (p.is_zero()) throw std::domain_error("identically zero");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

  std::optional<std::size_t> variable;
  for (std::size_t v = 0; v < p.context().size(); ++v) {
    if (!p.uses_variable(v)) continue;
    if (variable) throw std::invalid_argument("polynomial is not univariate");
    variable = v;
  }
  if (!variable) return {};

  Dense dense(p.degree_in(*variable) + 1);
  for (const auto& [m, c] : p.terms()) dense[m[*variable]] = c;

  Dense square_free = divmod(dense, gcd(dense, derivative(dense))).first;
  // Scale to a monic polynomial before converting to doubles.
  const Rational lead = square_free.back();
  std::vector<double> coefficients;
  for (const auto& c : square_free) coefficients.push_back((c / lead).to_double());
  return real_roots(coefficients, tol);
}

}  // namespace gbkit
