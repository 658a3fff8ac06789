#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbkit/rational.hpp"

namespace gbkit {

/// Ordered list of variable names. Position is the variable index; the first
/// declared variable is the lex-largest one.
///
/// Copies share the name list, so passing contexts around is cheap.
class VariableContext {
 public:
  /// Throws std::invalid_argument if `names` is empty, has duplicates, or
  /// holds something that is not an identifier ([A-Za-z_][A-Za-z0-9_]*).
  explicit VariableContext(std::vector<std::string> names);

  /// "x,y,z" -> (x, y, z). Surrounding whitespace per name is ignored.
  static VariableContext parse_list(std::string_view comma_separated);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t index) const { return (*names_)[index]; }
  std::span<const std::string> names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector. The total degree is cached and kept in sync by every
/// constructor.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  /// The unit monomial of the given arity.
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents) : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }
  std::uint64_t degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }

  /// Component-wise exponent <= `other`.
  bool divides(const Monomial& other) const;
  /// No variable occurs in both.
  bool is_coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws std::invalid_argument unless `other` divides this.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }

  /// Container ordering for map keys. Not a monomial order; use `compare`
  /// from order.hpp for anything algebraic.
  struct StorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return a.exponents_ < b.exponents_;
    }
  };

 private:
  std::vector<Exponent> exponents_;
  std::uint64_t degree_ = 0;
};

struct Term {
  Rational coefficient;
  Monomial monomial;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Never stores a zero coefficient; the zero polynomial has no terms. Term
/// storage carries no monomial order: ordered views come from order.hpp.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, Monomial::StorageLess>;

  /// The zero polynomial.
  explicit Polynomial(VariableContext context) : context_(std::move(context)) {}

  static Polynomial constant(VariableContext context, const Rational& value);
  static Polynomial variable(VariableContext context, std::size_t index);
  /// Like-monomials are combined and zero sums dropped.
  static Polynomial from_terms(VariableContext context, std::span<const Term> terms);

  const VariableContext& context() const { return context_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of `m`, zero when absent.
  Rational coefficient(const Monomial& m) const;
  std::uint64_t total_degree() const;
  /// Largest exponent of variable `index` over all terms.
  Monomial::Exponent degree_in(std::size_t index) const;
  /// Whether variable `index` occurs in some term.
  bool uses_variable(std::size_t index) const { return degree_in(index) > 0; }

  /// this += coefficient * monomial * other, in place.
  void add_multiple(const Rational& coefficient, const Monomial& monomial, const Polynomial& other);
  /// Adds one term in place, dropping it if the sum cancels.
  void add_term(const Rational& coefficient, const Monomial& monomial);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial pow(std::uint32_t exponent) const;

  /// Floating-point evaluation; `point` has one value per variable.
  double evaluate(std::span<const double> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.context_ == b.context_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Polynomial& other) const;

  VariableContext context_;
  TermMap terms_;
};

}  // namespace gbkit
