#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gbkit/groebner.hpp"

namespace gbkit {

/// True iff f reduces to zero modulo the basis. Only meaningful when the
/// basis is a Groebner basis.
bool is_member(const Polynomial& f, const GroebnerBasis& basis);

/// Basis members that only involve the last `keep_count` variables.
///
/// For a lex basis these generate the elimination ideal. Throws
/// std::invalid_argument("elimination requires lex") for other orders and
/// for keep_count outside [1, variable count].
std::vector<Polynomial> eliminate(const GroebnerBasis& basis, std::size_t keep_count);

/// Two-variable monomial ideal drawn as a lattice staircase.
struct StaircaseDiagram {
  using Corner = std::pair<std::uint32_t, std::uint32_t>;

  /// Pairwise incomparable exponent pairs, sorted by first exponent.
  std::vector<Corner> minimal_generators;
  /// Lattice extents used when rendering: columns 0..width, rows 0..height.
  std::uint32_t width = 0;
  std::uint32_t height = 0;

  /// Whether x^u y^v lies in the ideal.
  bool contains(std::uint32_t u, std::uint32_t v) const;
};

/// Staircase of an arbitrary set of 2-variable monomials. Dominated corners
/// are dropped.
StaircaseDiagram staircase_of(std::span<const Monomial> monomials);

/// Staircase of the leading-term ideal of a basis.
/// Throws std::invalid_argument("staircase supports 2 variables").
StaircaseDiagram staircase(const GroebnerBasis& basis);

/// Real roots of a polynomial in a single variable, ascending, each within
/// `tol` of a true root and reported once regardless of multiplicity.
///
/// Multiple roots are removed up front by dividing out gcd(p, p') exactly.
/// Throws std::domain_error("identically zero") for p = 0 and
/// std::invalid_argument if p involves more than one variable.
std::vector<double> univariate_real_roots(const Polynomial& p, double tol);

}  // namespace gbkit
