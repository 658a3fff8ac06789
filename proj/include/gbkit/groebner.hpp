#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gbkit/division.hpp"
#include "gbkit/order.hpp"
#include "gbkit/ring.hpp"

namespace gbkit {

/// Generators of an ideal, tagged with the order they were computed under.
///
/// Generators are nonzero and kept sorted by leading monomial, largest
/// first. `is_reduced()` means monic and inter-reduced.
class GroebnerBasis {
 public:
  GroebnerBasis(VariableContext context, std::vector<Polynomial> generators, MonomialOrder order,
                bool reduced);

  const VariableContext& context() const { return context_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  MonomialOrder order() const { return order_; }
  bool is_reduced() const { return reduced_; }
  std::size_t size() const { return generators_.size(); }

 private:
  VariableContext context_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  bool reduced_;
};

struct BuchbergerOptions {
  /// Skip pairs whose leading monomials are coprime. Their S-polynomials
  /// always reduce to zero, so this never changes the result.
  bool coprime_criterion = true;
  /// Stop with std::runtime_error once the basis would exceed this size.
  std::size_t max_basis_size = 10000;
};

/// (L/LT(p))*p - (L/LT(q))*q with L = lcm(LM(p), LM(q)).
/// Throws std::invalid_argument on a zero input.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, MonomialOrder order);

/// Full remainder of `f` on division by `basis` (in the given order).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, MonomialOrder order);

/// Buchberger completion with a FIFO pair queue.
///
/// Zero inputs are dropped; if nothing is left this throws
/// std::invalid_argument("empty generating set"). New basis elements are
/// scaled to be monic before they enter the queue. The result contains every
/// nonzero input generator unchanged.
GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order,
                         const BuchbergerOptions& options = {});

/// Minimalizes, inter-reduces and normalizes a Groebner basis into the
/// unique reduced basis of its ideal.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// buchberger followed by reduce_basis.
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                                     const BuchbergerOptions& options = {});

/// Every generator monic, and no term of any generator divisible by the
/// leading monomial of another.
bool is_interreduced(std::span<const Polynomial> generators, MonomialOrder order);

}  // namespace gbkit
