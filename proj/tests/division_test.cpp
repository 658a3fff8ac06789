#include <doctest.h>

#include <random>

#include "gbkit/division.hpp"
#include "support.hpp"

using namespace gbkit;
using gbkit::testing::poly;
using gbkit::testing::polys;
using gbkit::testing::vars;

namespace {

Polynomial reconstruct(const DivisionResult& r, std::span<const Polynomial> divisors) {
  Polynomial sum = r.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) sum += r.quotients[i] * divisors[i];
  return sum;
}

bool remainder_is_reduced(const Polynomial& r, std::span<const Polynomial> divisors, MonomialOrder order) {
  for (const auto& [m, c] : r.terms()) {
    for (const auto& d : divisors) {
      if (leading_monomial(d, order).divides(m)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("divide: textbook example with two divisors") {
  const auto ctx = vars("x,y");
  const auto f = poly("x^2*y + x*y^2 + y^2", ctx);
  const auto divisors = polys({"x*y - 1", "y^2 - 1"}, ctx);
  const auto r = divide(f, divisors, MonomialOrder::lex);
  REQUIRE(r.quotients.size() == 2);
  CHECK(r.quotients[0] == poly("x + y", ctx));
  CHECK(r.quotients[1] == poly("1", ctx));
  CHECK(r.remainder == poly("x + y + 1", ctx));
  // Hand expansion of the claimed identity.
  CHECK(poly("(x+y)*(x*y-1) + (y^2-1) + x + y + 1", ctx) == f);
}

TEST_CASE("divide: exact univariate division") {
  const auto ctx = vars("x");
  const auto divisors = polys({"x"}, ctx);
  const auto r = divide(poly("x^2 + x", ctx), divisors, MonomialOrder::lex);
  CHECK(r.quotients[0] == poly("x + 1", ctx));
  CHECK(r.remainder.is_zero());
}

TEST_CASE("divide: result depends on divisor order") {
  const auto ctx = vars("x,y");
  const auto f = poly("x*y^2 - x", ctx);

  const auto first = polys({"x*y + 1", "y^2 - 1"}, ctx);
  const auto a = divide(f, first, MonomialOrder::lex);
  CHECK(a.quotients[0] == poly("y", ctx));
  CHECK(a.quotients[1].is_zero());
  CHECK(a.remainder == poly("-x - y", ctx));
  CHECK(reconstruct(a, first) == f);

  const auto second = polys({"y^2 - 1", "x*y + 1"}, ctx);
  const auto b = divide(f, second, MonomialOrder::lex);
  CHECK(b.quotients[0] == poly("x", ctx));
  CHECK(b.quotients[1].is_zero());
  CHECK(b.remainder.is_zero());
  CHECK(reconstruct(b, second) == f);
}

TEST_CASE("divide: error paths") {
  const auto ctx = vars("x,y");
  const auto f = poly("x", ctx);
  const std::vector<Polynomial> with_zero{poly("x", ctx), Polynomial(ctx)};
  CHECK_THROWS_WITH_AS(divide(f, with_zero, MonomialOrder::lex), "zero divisor", std::invalid_argument);
  const std::vector<Polynomial> other_ring{poly("x", vars("x,z"))};
  CHECK_THROWS_WITH_AS(divide(f, other_ring, MonomialOrder::lex), "ring mismatch", std::invalid_argument);
  CHECK_THROWS_AS(divide(f, std::vector<Polynomial>{}, MonomialOrder::lex), std::invalid_argument);
}

TEST_CASE("divide: self and constant divisors") {
  const auto ctx = vars("x,y,z");
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = testing::random_nonzero_polynomial(rng, ctx, 4, 5);
    const auto order = testing::random_order(rng);

    const std::vector<Polynomial> self{f};
    const auto r = divide(f, self, order);
    CHECK(r.quotients[0] == Polynomial::constant(ctx, Rational(1)));
    CHECK(r.remainder.is_zero());

    Rational c = testing::random_rational(rng);
    if (c.is_zero()) c = Rational(7);
    const std::vector<Polynomial> constant{Polynomial::constant(ctx, c)};
    const auto rc = divide(f, constant, order);
    CHECK(rc.quotients[0] == f * c.inverse());
    CHECK(rc.remainder.is_zero());
  }
}

TEST_CASE("divide: identity, reducedness and degree bound on random inputs") {
  const auto ctx = vars("x,y,z");
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto order = testing::random_order(rng);
    const Polynomial f = testing::random_polynomial(rng, ctx, 6, 6);
    std::vector<Polynomial> divisors;
    const int k = 1 + i % 3;
    for (int j = 0; j < k; ++j) divisors.push_back(testing::random_nonzero_polynomial(rng, ctx, 3, 3));

    const auto r = divide(f, divisors, order);
    CHECK(reconstruct(r, divisors) == f);
    CHECK(remainder_is_reduced(r.remainder, divisors, order));
    CHECK(remainder(f, divisors, order) == r.remainder);
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      if (r.quotients[j].is_zero()) continue;
      CHECK(compare(order, leading_monomial(r.quotients[j] * divisors[j], order), leading_monomial(f, order)) <= 0);
    }
  }
}
