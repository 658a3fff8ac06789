#include "gbkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace gbkit {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
}

}  // namespace

VariableContext::VariableContext(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("variable list is empty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VariableContext VariableContext::parse_list(std::string_view comma_separated) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    const auto comma = comma_separated.find(',', start);
    names.emplace_back(trim(comma_separated.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return VariableContext(std::move(names));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  Monomial m(arity);
  m.exponents_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  require_arity(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::is_coprime(const Monomial& other) const {
  require_arity(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_arity(*this, other);
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (out.exponents_[i] > std::numeric_limits<Exponent>::max() - other.exponents_[i]) {
      throw std::overflow_error("exponent overflow");
    }
    out.exponents_[i] += other.exponents_[i];
  }
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= other.exponents_[i];
  out.degree_ -= other.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  require_arity(a, b);
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

Polynomial Polynomial::constant(VariableContext context, const Rational& value) {
  Polynomial p(std::move(context));
  p.add_term(value, Monomial(p.context_.size()));
  return p;
}

Polynomial Polynomial::variable(VariableContext context, std::size_t index) {
  Polynomial p(std::move(context));
  p.add_term(Rational(1), Monomial::variable(p.context_.size(), index));
  return p;
}

Polynomial Polynomial::from_terms(VariableContext context, std::span<const Term> terms) {
  Polynomial p(std::move(context));
  for (const auto& t : terms) p.add_term(t.coefficient, t.monomial);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Monomial::Exponent Polynomial::degree_in(std::size_t index) const {
  Monomial::Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
  return d;
}

void Polynomial::add_term(const Rational& coefficient, const Monomial& monomial) {
  if (monomial.arity() != context_.size()) throw std::invalid_argument("arity mismatch");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::add_multiple(const Rational& coefficient, const Monomial& monomial,
                              const Polynomial& other) {
  require_same_ring(other);
  if (coefficient.is_zero()) return;
  if (&other == this) {
    const Polynomial copy(other);
    add_multiple(coefficient, monomial, copy);
    return;
  }
  for (const auto& [m, c] : other.terms_) add_term(coefficient * c, monomial * m);
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  if (&other == this) return *this *= Rational(2);
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  if (&other == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.context_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result = constant(context_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != context_.size()) throw std::invalid_argument("arity mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m[i] != 0) t *= std::pow(point[i], static_cast<double>(m[i]));
    }
    sum += t;
  }
  return sum;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!(context_ == other.context_)) throw std::invalid_argument("ring mismatch");
}

}  // namespace gbkit
