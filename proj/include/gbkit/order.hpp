#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "gbkit/ring.hpp"

namespace gbkit {

/// Monomial orders. Variable significance follows the context declaration
/// order: the first variable is the largest.
enum class MonomialOrder { lex, grlex, grevlex };

std::string_view to_string(MonomialOrder order);
/// Accepts exactly "lex", "grlex", "grevlex".
std::optional<MonomialOrder> parse_order(std::string_view name);

/// Total order comparison of two monomials of equal arity.
///
/// lex compares exponents left to right. grlex compares total degree, then
/// lex. grevlex compares total degree, then looks at the last nonzero entry
/// of a - b: negative there means a is the larger one.
///
/// Throws std::invalid_argument("arity mismatch").
std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b);

/// Strict "a > b" under an order; suitable as a comparator for descending
/// containers.
struct DescendingBy {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(order, a, b) > 0; }
};

/// Throws std::invalid_argument("leading term of zero polynomial").
Term leading_term(const Polynomial& p, MonomialOrder order);
Monomial leading_monomial(const Polynomial& p, MonomialOrder order);
Rational leading_coefficient(const Polynomial& p, MonomialOrder order);

/// Terms of p in strictly decreasing order.
std::vector<Term> sorted_terms(const Polynomial& p, MonomialOrder order);

}  // namespace gbkit
