#include "gbkit/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbkit {

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.arity(); i-- > 0;) {
    // The smaller exponent in the last differing variable wins.
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

const Polynomial::TermMap::value_type& leading_entry(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  const auto& terms = p.terms();
  auto best = terms.begin();
  for (auto it = std::next(best); it != terms.end(); ++it) {
    if (compare(order, it->first, best->first) > 0) best = it;
  }
  return *best;
}

}  // namespace

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::grlex: return "grlex";
    case MonomialOrder::grevlex: return "grevlex";
  }
  return "?";
}

std::optional<MonomialOrder> parse_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::lex;
  if (name == "grlex") return MonomialOrder::grlex;
  if (name == "grevlex") return MonomialOrder::grevlex;
  return std::nullopt;
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  switch (order) {
    case MonomialOrder::lex:
      return lex_compare(a, b);
    case MonomialOrder::grlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return lex_compare(a, b);
    case MonomialOrder::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tiebreak(a, b);
  }
  throw std::logic_error("unknown monomial order");
}

Term leading_term(const Polynomial& p, MonomialOrder order) {
  const auto& [m, c] = leading_entry(p, order);
  return Term{c, m};
}

Monomial leading_monomial(const Polynomial& p, MonomialOrder order) {
  return leading_entry(p, order).first;
}

Rational leading_coefficient(const Polynomial& p, MonomialOrder order) {
  return leading_entry(p, order).second;
}

std::vector<Term> sorted_terms(const Polynomial& p, MonomialOrder order) {
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) out.push_back(Term{c, m});
  std::sort(out.begin(), out.end(), [order](const Term& a, const Term& b) {
    return compare(order, a.monomial, b.monomial) > 0;
  });
  return out;
}

}  // namespace gbkit
