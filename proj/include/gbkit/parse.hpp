#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbkit/order.hpp"
#include "gbkit/ring.hpp"

namespace gbkit {

/// Syntax or name-resolution failure, carrying the 0-based character offset
/// of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a polynomial over `ctx`.
///
///   expr   := ['-'|'+'] term (('+'|'-') term)*
///   term   := factor ('*' factor | '/' int ['^' int])*
///   factor := base ['^' int]
///   base   := int | variable | '(' expr ')'
///
/// Division is only by integer literals, so "3/2*x" and "x/2" are fine and
/// "x/y" is rejected. Multiplication must be written out.
Polynomial parse_polynomial(std::string_view text, const VariableContext& ctx);

/// Parses every string; the first failure aborts the whole system.
std::vector<Polynomial> parse_system(std::span<const std::string> texts, const VariableContext& ctx);

/// Canonical text form: terms in decreasing `order`, "0" for zero.
/// Always re-parses to the same polynomial.
std::string format_polynomial(const Polynomial& p, MonomialOrder order);

}  // namespace gbkit
