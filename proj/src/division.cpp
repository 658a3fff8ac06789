#include "gbkit/division.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>

namespace gbkit {

namespace {

using OrderedTerms = std::map<Monomial, Rational, DescendingBy>;

struct Divisor {
  const Polynomial* poly;
  Monomial lead_monomial;
  Rational lead_coefficient;
};

std::vector<Divisor> prepare(const Polynomial& f, std::span<const Polynomial> divisors,
                             MonomialOrder order) {
  if (divisors.empty()) throw std::invalid_argument("divisor list is empty");
  std::vector<Divisor> out;
  out.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (!(d.context() == f.context())) throw std::invalid_argument("ring mismatch");
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    auto lt = leading_term(d, order);
    out.push_back(Divisor{&d, std::move(lt.monomial), std::move(lt.coefficient)});
  }
  return out;
}

// p -= coefficient * monomial * g
void subtract_multiple(OrderedTerms& p, const Rational& coefficient, const Monomial& monomial,
                       const Polynomial& g) {
  for (const auto& [m, c] : g.terms()) {
    Rational delta = coefficient * c;
    auto [it, inserted] = p.try_emplace(monomial * m, -delta);
    if (inserted) continue;
    it->second -= delta;
    if (it->second.is_zero()) p.erase(it);
  }
}

DivisionResult run_division(const Polynomial& f, std::span<const Polynomial> divisors,
                            MonomialOrder order, bool want_quotients) {
  const auto prepared = prepare(f, divisors, order);

  DivisionResult result{{}, Polynomial(f.context())};
  if (want_quotients) result.quotients.assign(divisors.size(), Polynomial(f.context()));

  OrderedTerms p(f.terms().begin(), f.terms().end(), DescendingBy{order});
#ifndef NDEBUG
  std::optional<Monomial> previous_lead;
#endif
  while (!p.empty()) {
    auto lead = p.begin();
#ifndef NDEBUG
    // Termination: the leading monomial strictly decreases every iteration.
    assert(!previous_lead || compare(order, lead->first, *previous_lead) < 0);
    previous_lead = lead->first;
#endif
    bool division_occurred = false;
    for (std::size_t i = 0; i < prepared.size(); ++i) {
      const auto& d = prepared[i];
      if (!d.lead_monomial.divides(lead->first)) continue;
      const Rational coefficient = lead->second / d.lead_coefficient;
      const Monomial monomial = lead->first / d.lead_monomial;
      if (want_quotients) result.quotients[i].add_term(coefficient, monomial);
      subtract_multiple(p, coefficient, monomial, *d.poly);
      division_occurred = true;
      break;
    }
    if (!division_occurred) {
      result.remainder.add_term(lead->second, lead->first);
      p.erase(lead);
    }
  }
  return result;
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order) {
  return run_division(f, divisors, order, true);
}

Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order) {
  return std::move(run_division(f, divisors, order, false).remainder);
}

}  // namespace gbkit
