#include "gbkit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace gbkit {

namespace {

void sort_by_leading_monomial(std::vector<Polynomial>& gens, MonomialOrder order) {
  std::vector<std::pair<Monomial, Polynomial>> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) keyed.emplace_back(leading_monomial(g, order), std::move(g));
  std::stable_sort(keyed.begin(), keyed.end(), [order](const auto& a, const auto& b) {
    return compare(order, a.first, b.first) > 0;
  });
  gens.clear();
  for (auto& [m, g] : keyed) gens.push_back(std::move(g));
}

Polynomial monic(Polynomial p, MonomialOrder order) {
  const Rational lc = leading_coefficient(p, order);
  if (!lc.is_one()) p *= lc.inverse();
  return p;
}

}  // namespace

GroebnerBasis::GroebnerBasis(VariableContext context, std::vector<Polynomial> generators,
                             MonomialOrder order, bool reduced)
    : context_(std::move(context)), generators_(std::move(generators)), order_(order), reduced_(reduced) {
  for (const auto& g : generators_) {
    if (!(g.context() == context_)) throw std::invalid_argument("ring mismatch");
    if (g.is_zero()) throw std::invalid_argument("zero generator in basis");
  }
  sort_by_leading_monomial(generators_, order_);
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, MonomialOrder order) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("S-polynomial of zero polynomial");
  if (!(p.context() == q.context())) throw std::invalid_argument("ring mismatch");
  const Term lp = leading_term(p, order);
  const Term lq = leading_term(q, order);
  const Monomial l = Monomial::lcm(lp.monomial, lq.monomial);
  Polynomial s(p.context());
  s.add_multiple(lp.coefficient.inverse(), l / lp.monomial, p);
  s.add_multiple(-lq.coefficient.inverse(), l / lq.monomial, q);
  return s;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, MonomialOrder order) {
  return remainder(f, basis, order);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order,
                         const BuchbergerOptions& options) {
  std::vector<Polynomial> g;
  for (const auto& f : generators) {
    if (!f.is_zero()) g.push_back(f);
  }
  if (g.empty()) throw std::invalid_argument("empty generating set");
  const VariableContext context = g.front().context();
  for (const auto& f : g) {
    if (!(f.context() == context)) throw std::invalid_argument("ring mismatch");
  }
  if (g.size() > options.max_basis_size) throw std::runtime_error("basis size cap exceeded");

  std::vector<Monomial> leads;
  for (const auto& f : g) leads.push_back(leading_monomial(f, order));

  // Unordered pairs of distinct positions, first come first served.
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (options.coprime_criterion && leads[i].is_coprime(leads[j])) continue;

    Polynomial h = normal_form(s_polynomial(g[i], g[j], order), g, order);
    if (h.is_zero()) continue;
    if (g.size() >= options.max_basis_size) {
      throw std::runtime_error("basis size cap exceeded (" + std::to_string(options.max_basis_size) +
                               " elements)");
    }
    h = monic(std::move(h), order);
    const std::size_t k = g.size();
    for (std::size_t i2 = 0; i2 < k; ++i2) pairs.emplace_back(i2, k);
    leads.push_back(leading_monomial(h, order));
    g.push_back(std::move(h));
  }
  return GroebnerBasis(context, std::move(g), order, false);
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  const MonomialOrder order = basis.order();
  const auto& input = basis.generators();

  std::vector<Monomial> leads;
  for (const auto& g : input) leads.push_back(leading_monomial(g, order));

  // Drop every g whose leading monomial is divisible by that of another
  // surviving member. Among equal leading monomials the last one survives.
  std::vector<bool> alive(input.size(), true);
  for (std::size_t i = 0; i < input.size(); ++i) {
    for (std::size_t j = 0; j < input.size(); ++j) {
      if (j != i && alive[j] && leads[j].divides(leads[i])) {
        alive[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> survivors;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (alive[i]) survivors.push_back(input[i]);
  }

  // One pass suffices: leading terms of a minimal basis are untouched by
  // reduction, so earlier members stay reduced.
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(survivors.size() - 1);
    for (std::size_t j = 0; j < survivors.size(); ++j) {
      if (j != i) others.push_back(survivors[j]);
    }
    if (!others.empty()) survivors[i] = remainder(survivors[i], others, order);
  }
  for (auto& g : survivors) g = monic(std::move(g), order);

  if (!is_interreduced(survivors, order)) {
    throw std::logic_error("basis reduction did not reach an interreduced basis");
  }
  return GroebnerBasis(basis.context(), std::move(survivors), order, true);
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                                     const BuchbergerOptions& options) {
  return reduce_basis(buchberger(generators, order, options));
}

bool is_interreduced(std::span<const Polynomial> generators, MonomialOrder order) {
  std::vector<Monomial> leads;
  for (const auto& g : generators) {
    if (g.is_zero() || !leading_coefficient(g, order).is_one()) return false;
    leads.push_back(leading_monomial(g, order));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (const auto& [m, c] : generators[i].terms()) {
      for (std::size_t j = 0; j < generators.size(); ++j) {
        if (j != i && leads[j].divides(m)) return false;
      }
    }
  }
  return true;
}

}  // namespace gbkit
