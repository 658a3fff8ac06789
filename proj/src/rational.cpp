#include "gbkit/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace gbkit {

Rational Rational::normalize(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer literal");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal");
    }
    // mpz_class rejects a leading '+'.
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return normalize(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::approximate(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw std::domain_error("cannot approximate a non-finite value");
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");

  // The double is itself an exact dyadic rational; start from it and walk its
  // continued fraction, as in Python's Fraction.limit_denominator.
  const mpq_class exact(value);
  if (exact.get_den() <= max_denominator) return Rational(exact);

  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  const mpz_class bound = max_denominator;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > bound) break;
    mpz_class next_p0 = p1, next_q0 = q1;
    p1 = p0 + a * p1;
    q1 = q2;
    p0 = next_p0;
    q0 = next_q0;
    mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  const mpz_class k = (bound - q0) / q1;
  const mpq_class lower(p0 + k * p1, q0 + k * q1);
  const mpq_class upper(p1, q1);
  mpq_class best = (::abs(upper - exact) <= ::abs(lower - exact)) ? upper : lower;
  best.canonicalize();
  return Rational(std::move(best));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class q = 1 / value_;
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace gbkit
