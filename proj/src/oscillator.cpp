#include "gbkit/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gbkit::oscillator {

namespace {

constexpr double kRegimeTolerance = 1e-12;

void validate(double m, double k, double b) {
  if (!(m > 0)) throw std::invalid_argument("mass must be positive");
  if (!(k > 0)) throw std::invalid_argument("spring constant must be positive");
  if (!(b >= 0)) throw std::invalid_argument("damping coefficient must be nonnegative");
}

double discriminant(const OscillatorParams& p) { return 4 * p.m * p.k - p.b * p.b; }

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::underdamped: return "underdamped";
    case Regime::critical: return "critical";
    case Regime::overdamped: return "overdamped";
  }
  return "?";
}

Regime classify(double m, double k, double b) {
  validate(m, k, b);
  const double stiffness = 4 * m * k;
  const double friction = b * b;
  const double d = stiffness - friction;
  if (std::abs(d) <= kRegimeTolerance * std::max(stiffness, friction)) return Regime::critical;
  return d > 0 ? Regime::underdamped : Regime::overdamped;
}

Regime classify(const Rational& m, const Rational& k, const Rational& b) {
  if (m.sign() <= 0) throw std::invalid_argument("mass must be positive");
  if (k.sign() <= 0) throw std::invalid_argument("spring constant must be positive");
  if (b.sign() < 0) throw std::invalid_argument("damping coefficient must be nonnegative");
  const int s = (Rational(4) * m * k - b * b).sign();
  if (s == 0) return Regime::critical;
  return s > 0 ? Regime::underdamped : Regime::overdamped;
}

OscillatorSolution solve_ivp(const OscillatorParams& p) {
  if (classify(p.m, p.k, p.b) != Regime::underdamped) {
    throw std::domain_error("underdamped regime required (4mk - b^2 <= 0)");
  }
  const double root = std::sqrt(discriminant(p));
  OscillatorSolution s{};
  s.omega = root / (2 * p.m);
  s.beta = -p.b / (2 * p.m);
  s.c1 = p.y0;
  s.c2 = (2 * p.m * p.y1 + p.b * p.y0) / root;
  s.amplitude = std::hypot(s.c1, s.c2);
  // atan2(0, 0) is 0, which is the convention for the zero state.
  s.phase = std::atan2(s.c1, s.c2);
  return s;
}

double closed_form_amplitude(const OscillatorParams& p) {
  validate(p.m, p.k, p.b);
  const double energy = p.m * (p.k * p.y0 * p.y0 + p.b * p.y0 * p.y1 + p.m * p.y1 * p.y1);
  return 2 * std::sqrt(energy / discriminant(p));
}

double closed_form_phase(const OscillatorParams& p) {
  validate(p.m, p.k, p.b);
  const double denominator = p.b * p.y0 + 2 * p.m * p.y1;
  if (denominator == 0) {
    if (p.y0 == 0) return 0.0;
    return std::copysign(std::numbers::pi / 2, p.y0);
  }
  return std::atan(p.y0 * std::sqrt(discriminant(p)) / denominator);
}

Sample evaluate(const OscillatorSolution& s, double t) {
  const double decay = std::exp(s.beta * t);
  const double envelope = std::abs(s.amplitude) * decay;
  return Sample{t, s.amplitude * decay * std::sin(s.omega * t + s.phase), envelope, -envelope};
}

std::vector<Sample> sample(const OscillatorSolution& s, double t_end, int n) {
  if (n < 2) throw std::invalid_argument("sample count must be at least 2");
  if (!(t_end > 0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be positive");
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = (i == n - 1) ? t_end : t_end * static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back(evaluate(s, t));
  }
  return out;
}

}  // namespace gbkit::oscillator
