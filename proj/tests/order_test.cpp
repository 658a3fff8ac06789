#include <doctest.h>

#include <random>

#include "gbkit/order.hpp"
#include "support.hpp"

using namespace gbkit;
using gbkit::testing::poly;
using gbkit::testing::vars;

namespace {

constexpr MonomialOrder kOrders[] = {MonomialOrder::lex, MonomialOrder::grlex, MonomialOrder::grevlex};

// grevlex by its alternative textbook phrasing: higher degree wins, ties go
// to the monomial that is smaller in lex order on the reversed variables.
std::strong_ordering grevlex_reference(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  std::vector<Monomial::Exponent> ra(a.exponents().rbegin(), a.exponents().rend());
  std::vector<Monomial::Exponent> rb(b.exponents().rbegin(), b.exponents().rend());
  return rb <=> ra;
}

// grlex spelled out independently.
std::strong_ordering grlex_reference(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  std::vector<Monomial::Exponent> va(a.exponents().begin(), a.exponents().end());
  std::vector<Monomial::Exponent> vb(b.exponents().begin(), b.exponents().end());
  return va <=> vb;
}

}  // namespace

TEST_CASE("compare examples") {
  const Monomial x2y({2, 1});
  const Monomial xy3({1, 3});
  CHECK(compare(MonomialOrder::lex, x2y, xy3) == std::strong_ordering::greater);
  CHECK(compare(MonomialOrder::grlex, x2y, xy3) == std::strong_ordering::less);
  CHECK(compare(MonomialOrder::grevlex, Monomial({1, 2, 1}), Monomial({2, 0, 2})) ==
        std::strong_ordering::greater);
  for (auto o : kOrders) CHECK(compare(o, x2y, x2y) == std::strong_ordering::equal);
  CHECK_THROWS_WITH_AS(compare(MonomialOrder::lex, x2y, Monomial({1, 1, 1})), "arity mismatch",
                       std::invalid_argument);
}

TEST_CASE("leading_term examples") {
  const auto ctx = vars("x,y");
  const Term a = leading_term(poly("x + y^2", ctx), MonomialOrder::lex);
  CHECK(a.monomial == Monomial({1, 0}));
  CHECK(a.coefficient.is_one());
  CHECK(leading_term(poly("x + y^2", ctx), MonomialOrder::grlex).monomial == Monomial({0, 2}));
  CHECK(leading_monomial(poly("x^2*y + x*y^2 + y^2", ctx), MonomialOrder::lex) == Monomial({2, 1}));
  CHECK(leading_coefficient(poly("-3*x + 2", ctx), MonomialOrder::grevlex) == Rational(-3));
  CHECK_THROWS_WITH_AS(leading_term(Polynomial(ctx), MonomialOrder::lex), "leading term of zero polynomial",
                       std::invalid_argument);
}

TEST_CASE("order names are exact") {
  CHECK(parse_order("lex") == MonomialOrder::lex);
  CHECK(parse_order("grlex") == MonomialOrder::grlex);
  CHECK(parse_order("grevlex") == MonomialOrder::grevlex);
  CHECK_FALSE(parse_order("Lex").has_value());
  CHECK_FALSE(parse_order("revlex").has_value());
  for (auto o : kOrders) CHECK(parse_order(to_string(o)) == o);
}

TEST_CASE("orders are total, well-founded and multiplicative") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 4;
    const Monomial a = testing::random_monomial(rng, n, 6);
    const Monomial b = testing::random_monomial(rng, n, 6);
    const Monomial c = testing::random_monomial(rng, n, 6);
    const Monomial one(n);
    for (auto o : kOrders) {
      const auto ab = compare(o, a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(compare(o, b, a) == (0 <=> ab));
      CHECK(compare(o, one, a) <= 0);
      CHECK(compare(o, a * c, b * c) == ab);
    }
    CHECK(compare(MonomialOrder::grevlex, a, b) == grevlex_reference(a, b));
    CHECK(compare(MonomialOrder::grlex, a, b) == grlex_reference(a, b));
  }
}

TEST_CASE("orders agree on univariate monomials") {
  for (unsigned i = 0; i < 6; ++i) {
    for (unsigned j = 0; j < 6; ++j) {
      const Monomial a({i}), b({j});
      CHECK(compare(MonomialOrder::lex, a, b) == compare(MonomialOrder::grlex, a, b));
      CHECK(compare(MonomialOrder::lex, a, b) == compare(MonomialOrder::grevlex, a, b));
    }
  }
}

TEST_CASE("grlex and grevlex coincide in two variables") {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Monomial a = testing::random_monomial(rng, 2, 8);
    const Monomial b = testing::random_monomial(rng, 2, 8);
    CHECK(grlex_reference(a, b) == grevlex_reference(a, b));
    CHECK(compare(MonomialOrder::grlex, a, b) == compare(MonomialOrder::grevlex, a, b));
  }
}

TEST_CASE("sorted_terms is strictly decreasing") {
  const auto ctx = vars("x,y,z");
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = testing::random_polynomial(rng, ctx, 5, 8);
    for (auto o : kOrders) {
      const auto terms = sorted_terms(p, o);
      for (std::size_t k = 1; k < terms.size(); ++k) CHECK(compare(o, terms[k - 1].monomial, terms[k].monomial) > 0);
      if (!terms.empty()) CHECK(terms.front().monomial == leading_monomial(p, o));
    }
  }
}
