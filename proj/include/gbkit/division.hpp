#pragma once

#include <span>
#include <vector>

#include "gbkit/order.hpp"
#include "gbkit/ring.hpp"

namespace gbkit {

/// f = sum(quotients[i] * divisors[i]) + remainder, and no term of the
/// remainder is divisible by any divisor's leading term.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division of `f` by an ordered divisor list.
///
/// Each step looks for the first divisor whose leading term divides the
/// current leading term; if there is none, that term moves to the
/// remainder. The result depends on the divisor order.
///
/// Throws std::invalid_argument for an empty list, a zero divisor ("zero
/// divisor") or mixed rings ("ring mismatch").
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order);

/// The remainder of `divide` without building quotients.
Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order);

}  // namespace gbkit
