#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gbkit/oscillator.hpp"
#include "gbkit/svg.hpp"

using namespace gbkit;
using namespace gbkit::oscillator;

namespace {

constexpr double kPi = std::numbers::pi;

double y_at(const OscillatorSolution& s, double t) { return evaluate(s, t).y; }

OscillatorParams random_underdamped(std::mt19937& rng) {
  std::uniform_real_distribution<double> mk(0.5, 5.0);
  std::uniform_real_distribution<double> frac(0.0, 0.95);
  std::uniform_real_distribution<double> init(-3.0, 3.0);
  OscillatorParams p;
  p.m = mk(rng);
  p.k = mk(rng);
  p.b = frac(rng) * 2 * std::sqrt(p.m * p.k);
  p.y0 = init(rng);
  p.y1 = init(rng);
  return p;
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(classify(1.0, 1.0, 0.0) == Regime::underdamped);
  CHECK(classify(1.0, 1.0, 2.0) == Regime::critical);
  CHECK(classify(1.0, 1.0, 3.0) == Regime::overdamped);
  CHECK(classify(Rational(1), Rational(1), Rational(2)) == Regime::critical);
  CHECK(classify(Rational::normalize(1, 3), Rational(3), Rational(2)) == Regime::critical);
  CHECK(classify(0.1, 0.1, 0.2) == Regime::critical);  // 4mk - b^2 rounds near 0
  CHECK_THROWS_AS(classify(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(classify(1.0, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(classify(1.0, 1.0, -0.5), std::invalid_argument);
  CHECK(to_string(Regime::overdamped) == "overdamped");
}

TEST_CASE("solve_ivp examples") {
  SUBCASE("sine") {
    const auto s = solve_ivp({1, 1, 0, 0, 1});
    CHECK(s.omega == doctest::Approx(1));
    CHECK(s.beta == 0);
    CHECK(s.amplitude == doctest::Approx(1));
    CHECK(std::abs(s.phase) < 1e-15);
    CHECK(y_at(s, kPi / 2) == doctest::Approx(1).epsilon(1e-12));
  }
  SUBCASE("cosine") {
    const auto s = solve_ivp({1, 1, 0, 1, 0});
    CHECK(s.amplitude == doctest::Approx(1));
    CHECK(s.phase == doctest::Approx(kPi / 2));
    CHECK(closed_form_phase({1, 1, 0, 1, 0}) == doctest::Approx(kPi / 2));
  }
  SUBCASE("damped") {
    const OscillatorParams p{1, 5, 2, 1, 0};
    const auto s = solve_ivp(p);
    CHECK(s.omega == doctest::Approx(2));
    CHECK(s.beta == doctest::Approx(-1));
    CHECK(s.c1 == doctest::Approx(1));
    CHECK(s.c2 == doctest::Approx(0.5));
    CHECK(s.amplitude == doctest::Approx(std::sqrt(5.0) / 2).epsilon(1e-14));
    CHECK(std::abs(s.amplitude - 1.118033989) < 1e-9);
    CHECK(s.phase == doctest::Approx(std::atan(2.0)).epsilon(1e-14));
    CHECK(std::abs(s.phase - 1.107148718) < 1e-9);
    CHECK(closed_form_amplitude(p) == doctest::Approx(2 * std::sqrt(5.0 / 16)).epsilon(1e-14));
  }
  SUBCASE("rest state") {
    const auto s = solve_ivp({2, 3, 1, 0, 0});
    CHECK(s.amplitude == 0);
    CHECK(s.phase == 0);
  }
  SUBCASE("wrong regime") {
    CHECK_THROWS_WITH_AS(solve_ivp({1, 1, 2, 1, 0}), doctest::Contains("underdamped regime required"),
                         std::domain_error);
    CHECK_THROWS_AS(solve_ivp({1, 1, 3, 1, 0}), std::domain_error);
  }
}

TEST_CASE("single-argument phase matches when the denominator is positive") {
  std::mt19937 rng(81);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_underdamped(rng);
    const auto s = solve_ivp(p);
    if (p.b * p.y0 + 2 * p.m * p.y1 > 1e-9) CHECK(closed_form_phase(p) == doctest::Approx(s.phase).epsilon(1e-12));
    // The two-argument phase always reproduces the initial displacement.
    CHECK(std::abs(y_at(s, 0) - p.y0) < 1e-12 * (1 + std::abs(p.y0)));
  }
}

TEST_CASE("evaluate and sample examples") {
  const auto s = solve_ivp({1, 1, 0, 0, 1});
  const auto rows = sample(s, 2 * kPi, 5);
  REQUIRE(rows.size() == 5);
  const double expected[] = {0, 1, 0, -1, 0};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(rows[i].y - expected[i]) < 1e-12);
  CHECK(rows.back().t == 2 * kPi);
  for (const auto& r : rows) CHECK(r.env_hi == doctest::Approx(1));

  const auto two = sample(s, 3.0, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].t == 0);
  CHECK(two[1].t == 3.0);

  CHECK_THROWS_AS(sample(s, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample(s, 0.0, 5), std::invalid_argument);
}

TEST_CASE("solutions satisfy the initial value problem") {
  std::mt19937 rng(83);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_underdamped(rng);
    const auto s = solve_ivp(p);
    CHECK(std::abs(s.amplitude - closed_form_amplitude(p)) <= 1e-12 * std::max(1.0, s.amplitude));
    CHECK(std::abs(s.c1 - s.amplitude * std::sin(s.phase)) <= 1e-12 * std::max(1.0, s.amplitude));
    CHECK(std::abs(s.c2 - s.amplitude * std::cos(s.phase)) <= 1e-12 * std::max(1.0, s.amplitude));

    // Richardson-refined central difference for y'(0).
    const double h = 1e-3;
    const double d1 = (y_at(s, h) - y_at(s, -h)) / (2 * h);
    const double d2 = (y_at(s, h / 2) - y_at(s, -h / 2)) / h;
    CHECK(std::abs((4 * d2 - d1) / 3 - p.y1) < 1e-6);

    std::uniform_real_distribution<double> when(0.0, 5.0);
    const double t = when(rng);
    const double e = 1e-4;
    const double yp = (y_at(s, t + e) - y_at(s, t - e)) / (2 * e);
    const double ypp = (y_at(s, t + e) - 2 * y_at(s, t) + y_at(s, t - e)) / (e * e);
    CHECK(std::abs(p.m * ypp + p.b * yp + p.k * y_at(s, t)) < 1e-4 * (1 + s.amplitude) * (1 + p.m + p.k));

    for (const auto& r : sample(s, 10.0, 101)) {
      CHECK(r.y <= r.env_hi + 1e-12);
      CHECK(r.y >= r.env_lo - 1e-12);
      CHECK(r.env_lo == -r.env_hi);
    }
  }
}

TEST_CASE("envelope tangency and energy decay") {
  const OscillatorParams p{1, 5, 0.4, 1, 0.3};
  const auto s = solve_ivp(p);
  double previous = INFINITY;
  for (int j = 0; j < 6; ++j) {
    double t = (kPi / 2 - s.phase + 2 * kPi * j) / s.omega;
    if (t < 0) continue;
    const auto e = evaluate(s, t);
    CHECK(std::abs(e.y - e.env_hi) < 1e-12);
    CHECK(std::abs(e.y) < previous);
    previous = std::abs(e.y);
  }
}

TEST_CASE("oscillator svg is self-contained") {
  const auto s = solve_ivp({1, 5, 0.4, 1, 0});
  const auto svg = svg::oscillator(sample(s, 10, 50), svg::PlotSize{640, 320});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 640 320\"") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
