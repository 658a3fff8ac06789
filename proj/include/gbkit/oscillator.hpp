#pragma once

#include <string_view>
#include <vector>

#include "gbkit/rational.hpp"

namespace gbkit::oscillator {

/// m y'' + b y' + k y = 0 with y(0) = y0, y'(0) = y1.
struct OscillatorParams {
  double m = 1.0;   // mass, kg
  double k = 1.0;   // spring constant, N/m
  double b = 0.0;   // damping coefficient, N*s/m
  double y0 = 0.0;  // initial displacement, m
  double y1 = 0.0;  // initial velocity, m/s
};

enum class Regime { underdamped, critical, overdamped };

std::string_view to_string(Regime regime);

/// Sign of the discriminant 4mk - b^2. Floating-point inputs are compared
/// with a relative tolerance of 1e-12; the Rational overload is exact.
/// Throws std::invalid_argument unless m > 0, k > 0, b >= 0.
Regime classify(double m, double k, double b);
Regime classify(const Rational& m, const Rational& k, const Rational& b);

/// y(t) = exp(beta t) (c1 cos(omega t) + c2 sin(omega t))
///      = amplitude exp(beta t) sin(omega t + phase)
struct OscillatorSolution {
  double omega;      // sqrt(4mk - b^2) / 2m
  double beta;       // -b / 2m
  double amplitude;  // sqrt(c1^2 + c2^2)
  double phase;      // atan2(c1, c2)
  double c1;
  double c2;
};

/// Closed-form underdamped solution of the initial value problem.
///
/// The phase uses the two-argument arctangent so that y(0) = y0 holds in
/// every quadrant; a zero initial state gives amplitude 0 and phase 0.
/// Throws std::domain_error when the system is not underdamped.
OscillatorSolution solve_ivp(const OscillatorParams& params);

/// Amplitude straight from the initial data:
/// 2 sqrt(m (k y0^2 + b y0 y1 + m y1^2) / (4mk - b^2)).
double closed_form_amplitude(const OscillatorParams& params);

/// Single-argument phase arctan(y0 sqrt(4mk - b^2) / (b y0 + 2m y1)).
/// Only matches `solve_ivp` when b y0 + 2m y1 > 0; a zero denominator gives
/// +-pi/2 by the sign of y0.
double closed_form_phase(const OscillatorParams& params);

struct Sample {
  double t;
  double y;
  double env_hi;  // |A| exp(beta t)
  double env_lo;  // -env_hi
};

Sample evaluate(const OscillatorSolution& solution, double t);

/// n >= 2 evenly spaced samples on [0, t_end], both ends included.
/// Throws std::invalid_argument for n < 2 or t_end <= 0.
std::vector<Sample> sample(const OscillatorSolution& solution, double t_end, int n);

}  // namespace gbkit::oscillator
