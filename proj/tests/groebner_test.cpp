#include <doctest.h>

#include <algorithm>
#include <random>

#include "gbkit/groebner.hpp"
#include "support.hpp"

using namespace gbkit;
using gbkit::testing::poly;
using gbkit::testing::polys;
using gbkit::testing::vars;

TEST_CASE("s_polynomial examples") {
  const auto ctx = vars("x,y");
  const auto p = poly("x^3 - 2*x*y", ctx);
  const auto q = poly("x^2*y - 2*y^2 + x", ctx);
  CHECK(s_polynomial(p, q, MonomialOrder::grlex) == poly("-x^2", ctx));
  // Hand expansion: L = x^3*y.
  CHECK(poly("y*(x^3 - 2*x*y) - x*(x^2*y - 2*y^2 + x)", ctx) == poly("-x^2", ctx));
  CHECK(s_polynomial(p, p, MonomialOrder::grlex).is_zero());
  for (auto o : {MonomialOrder::lex, MonomialOrder::grlex, MonomialOrder::grevlex}) {
    CHECK(s_polynomial(poly("x^2", ctx), poly("y^2", ctx), o).is_zero());
  }
  CHECK_THROWS_AS(s_polynomial(p, Polynomial(ctx), MonomialOrder::lex), std::invalid_argument);
}

TEST_CASE("s_polynomial is antisymmetric") {
  const auto ctx = vars("x,y,z");
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto order = testing::random_order(rng);
    const auto p = testing::random_nonzero_polynomial(rng, ctx, 4);
    const auto q = testing::random_nonzero_polynomial(rng, ctx, 4);
    CHECK(s_polynomial(p, q, order) == -s_polynomial(q, p, order));
  }
}

TEST_CASE("normal_form examples") {
  const auto ctx = vars("x,y");
  const auto g = polys({"x^2", "x*y", "y^2 - x/2"}, ctx);
  CHECK(normal_form(g[1], g, MonomialOrder::grlex).is_zero());
  CHECK(normal_form(poly("y^3", ctx), g, MonomialOrder::grlex).is_zero());
  CHECK(normal_form(poly("x + y", ctx), g, MonomialOrder::grlex) == poly("x + y", ctx));
}

TEST_CASE("buchberger examples") {
  const auto ctx = vars("x,y");
  SUBCASE("single generator") {
    const auto f = polys({"x"}, ctx);
    const auto g = buchberger(f, MonomialOrder::lex);
    REQUIRE(g.size() == 1);
    CHECK(g.generators()[0] == f[0]);
    CHECK_FALSE(g.is_reduced());
  }
  SUBCASE("worked grlex ideal") {
    const auto f = polys({"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}, ctx);
    const auto g = buchberger(f, MonomialOrder::grlex);
    CHECK(testing::satisfies_buchberger_criterion(g.generators(), MonomialOrder::grlex));
    for (const auto& input : f) {
      CHECK(std::find(g.generators().begin(), g.generators().end(), input) != g.generators().end());
    }
    const auto reduced = reduce_basis(g);
    CHECK(reduced.is_reduced());
    CHECK(testing::canonical_set(reduced.generators(), MonomialOrder::grlex) ==
          testing::canonical_set(polys({"x^2", "x*y", "y^2 - 1/2*x"}, ctx), MonomialOrder::grlex));
    // Largest leading monomial first.
    CHECK(format_polynomial(reduced.generators().front(), MonomialOrder::grlex) == "x^2");
  }
  SUBCASE("whole ring") {
    const auto g = buchberger(polys({"x - 1", "x"}, ctx), MonomialOrder::lex);
    const bool has_constant = std::any_of(g.generators().begin(), g.generators().end(),
                                          [](const Polynomial& p) { return p.is_constant(); });
    CHECK(has_constant);
    const auto r = reduce_basis(g);
    REQUIRE(r.size() == 1);
    CHECK(r.generators()[0] == poly("1", ctx));
  }
  SUBCASE("empty input") {
    CHECK_THROWS_WITH_AS(buchberger(std::vector<Polynomial>{}, MonomialOrder::lex), "empty generating set",
                         std::invalid_argument);
    const std::vector<Polynomial> zeros{Polynomial(ctx), Polynomial(ctx)};
    CHECK_THROWS_WITH_AS(buchberger(zeros, MonomialOrder::lex), "empty generating set", std::invalid_argument);
  }
  SUBCASE("zero generators are dropped") {
    std::vector<Polynomial> f{Polynomial(ctx), poly("x*y - 1", ctx)};
    CHECK(buchberger(f, MonomialOrder::grevlex).size() == 1);
  }
}

TEST_CASE("basis size cap turns runaway into an error") {
  const auto ctx = vars("x,y,z");
  const auto f = polys({"x^2 + y*z - 1", "y^2 - x*z", "z^3 - x*y + 2"}, ctx);
  BuchbergerOptions options;
  options.max_basis_size = 3;
  CHECK_THROWS_AS(buchberger(f, MonomialOrder::lex, options), std::runtime_error);
}

TEST_CASE("reduce_basis examples") {
  const auto ctx = vars("x,y");
  const GroebnerBasis g(ctx, polys({"x^2", "x*y", "y^2 - x/2", "x^3"}, ctx), MonomialOrder::grlex, false);
  const auto r = reduce_basis(g);
  CHECK(testing::canonical_set(r.generators(), MonomialOrder::grlex) ==
        testing::canonical_set(polys({"x^2", "x*y", "y^2 - x/2"}, ctx), MonomialOrder::grlex));

  const GroebnerBasis two_x(ctx, polys({"2*x"}, ctx), MonomialOrder::lex, false);
  CHECK(reduce_basis(two_x).generators()[0] == poly("x", ctx));

  const auto again = reduce_basis(r);
  CHECK(again.generators() == r.generators());
}

TEST_CASE("random ideals: criterion, containment, reducedness, uniqueness") {
  const auto ctx = vars("x,y,z");
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    const auto order = testing::random_order(rng);
    std::vector<Polynomial> f;
    const int k = 1 + i % 3;
    for (int j = 0; j < k; ++j) f.push_back(testing::random_nonzero_polynomial(rng, ctx, 3, 3));

    const auto g = buchberger(f, order);
    CHECK(testing::satisfies_buchberger_criterion(g.generators(), order));
    const auto r = reduce_basis(g);
    CHECK(testing::satisfies_buchberger_criterion(r.generators(), order));
    for (const auto& input : f) CHECK(normal_form(input, r.generators(), order).is_zero());
    // Reduced basis elements lie in the ideal of the inputs.
    for (const auto& b : r.generators()) CHECK(normal_form(b, g.generators(), order).is_zero());
    CHECK(is_interreduced(r.generators(), order));
    for (const auto& b : r.generators()) CHECK(leading_coefficient(b, order).is_one());

    const auto expected = testing::canonical_set(r.generators(), order);
    std::vector<Polynomial> shuffled = f;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(testing::canonical_set(reduced_groebner_basis(shuffled, order).generators(), order) == expected);

    BuchbergerOptions no_criterion;
    no_criterion.coprime_criterion = false;
    CHECK(testing::canonical_set(reduced_groebner_basis(f, order, no_criterion).generators(), order) == expected);
  }
}
