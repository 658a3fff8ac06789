#include "gbkit/kinematics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gbkit/groebner.hpp"
#include "gbkit/ideal.hpp"
#include "gbkit/roots.hpp"

namespace gbkit::kinematics {

namespace {

constexpr std::size_t kVariables = 4;
using Point = std::array<double, kVariables>;

// Coefficients below this fraction of their own magnitude scale are
// treated as cancelled after substituting floating-point values.
constexpr double kCancellation = 1e-9;
// Layer polynomials must vanish to this relative accuracy at a candidate.
constexpr double kConsistency = 1e-6;

void validate(const ArmSpec& arm) {
  if (!(arm.l1 > 0) || !(arm.l2 > 0)) throw std::invalid_argument("link lengths must be positive");
}

Rational snap(double v) { return Rational::approximate(v, kSnapDenominator); }

double wrap_angle(double theta) {
  constexpr double pi = std::numbers::pi;
  while (theta <= -pi) theta += 2 * pi;
  while (theta > pi) theta -= 2 * pi;
  if (theta == 0) theta = 0.0;
  return theta;
}

double angle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

// Univariate view of g in variable v after substituting the known values of
// variables v+1.., with the per-degree magnitude used to spot cancellation.
struct Collapsed {
  std::vector<double> coefficients;
  std::vector<double> scale;

  int degree() const {
    for (std::size_t d = coefficients.size(); d-- > 0;) {
      if (std::abs(coefficients[d]) > kCancellation * scale[d]) return static_cast<int>(d);
    }
    return -1;
  }
};

Collapsed collapse(const Polynomial& g, std::size_t v, const Point& known) {
  Collapsed out;
  out.coefficients.assign(g.degree_in(v) + 1, 0.0);
  out.scale.assign(out.coefficients.size(), 0.0);
  for (const auto& [m, c] : g.terms()) {
    double t = c.to_double();
    for (std::size_t u = v + 1; u < kVariables; ++u) {
      if (m[u] != 0) t *= std::pow(known[u], static_cast<double>(m[u]));
    }
    out.coefficients[m[v]] += t;
    out.scale[m[v]] += std::abs(t);
  }
  return out;
}

double evaluate_scaled(const Polynomial& g, const Point& point, double& scale) {
  double sum = 0.0;
  scale = 0.0;
  for (const auto& [m, c] : g.terms()) {
    double t = c.to_double();
    for (std::size_t u = 0; u < kVariables; ++u) {
      if (m[u] != 0) t *= std::pow(point[u], static_cast<double>(m[u]));
    }
    sum += t;
    scale += std::abs(t);
  }
  return sum;
}

bool layer_vanishes(const std::vector<const Polynomial*>& layer, const Point& point) {
  return std::all_of(layer.begin(), layer.end(), [&](const Polynomial* g) {
    double scale = 0.0;
    const double value = evaluate_scaled(*g, point, scale);
    return std::abs(value) <= kConsistency * (1.0 + scale);
  });
}

// Solves the triangular lex basis from the last variable upwards.
std::vector<Point> back_substitute(const GroebnerBasis& basis, double tol) {
  std::vector<Point> partial{Point{}};
  for (std::size_t v = kVariables; v-- > 0;) {
    std::vector<const Polynomial*> layer;
    for (const auto& g : basis.generators()) {
      bool earlier = false;
      for (std::size_t u = 0; u < v; ++u) earlier = earlier || g.uses_variable(u);
      if (!earlier && g.uses_variable(v)) layer.push_back(&g);
    }
    if (layer.empty()) throw std::domain_error("solution set not finite");

    std::vector<Point> next;
    for (const Point& known : partial) {
      std::vector<double> candidates;
      if (v + 1 == kVariables) {
        // The eliminant is exact; let the rational root finder strip
        // repeated factors before bracketing.
        const Polynomial* eliminant = *std::min_element(
            layer.begin(), layer.end(),
            [v](const Polynomial* a, const Polynomial* b) { return a->degree_in(v) < b->degree_in(v); });
        candidates = univariate_real_roots(*eliminant, tol);
      } else {
        const Collapsed* best = nullptr;
        std::vector<Collapsed> collapsed;
        collapsed.reserve(layer.size());
        for (const Polynomial* g : layer) collapsed.push_back(collapse(*g, v, known));
        bool consistent = true;
        for (const auto& c : collapsed) {
          const int d = c.degree();
          if (d == 0) consistent = false;
          if (d >= 1 && (best == nullptr || d < best->degree())) best = &c;
        }
        if (!consistent) continue;
        if (best == nullptr) throw std::domain_error("solution set not finite");
        const int d = best->degree();
        if (d == 1) {
          candidates.push_back(-best->coefficients[0] / best->coefficients[1]);
        } else {
          std::vector<double> trimmed(best->coefficients.begin(), best->coefficients.begin() + d + 1);
          candidates = real_roots(trimmed, tol);
        }
      }
      for (double value : candidates) {
        Point p = known;
        p[v] = value;
        if (layer_vanishes(layer, p)) next.push_back(p);
      }
    }
    partial = std::move(next);
  }
  return partial;
}

}  // namespace

VariableContext joint_context() {
  static const VariableContext ctx({"c1", "s1", "c2", "s2"});
  return ctx;
}

std::vector<Polynomial> ik_system(const Rational& l1, const Rational& l2, const Rational& x,
                                  const Rational& y) {
  const VariableContext ctx = joint_context();
  const Polynomial c1 = Polynomial::variable(ctx, 0);
  const Polynomial s1 = Polynomial::variable(ctx, 1);
  const Polynomial c2 = Polynomial::variable(ctx, 2);
  const Polynomial s2 = Polynomial::variable(ctx, 3);
  const Polynomial one = Polynomial::constant(ctx, Rational(1));
  return {
      l1 * c1 + l2 * (c1 * c2 - s1 * s2) - Polynomial::constant(ctx, x),
      l1 * s1 + l2 * (s1 * c2 + c1 * s2) - Polynomial::constant(ctx, y),
      c1 * c1 + s1 * s1 - one,
      c2 * c2 + s2 * s2 - one,
  };
}

std::vector<Polynomial> ik_system(const ArmSpec& arm, const Target& target) {
  validate(arm);
  return ik_system(snap(arm.l1), snap(arm.l2), snap(target.x), snap(target.y));
}

std::pair<double, double> forward_kinematics(const ArmSpec& arm, double theta1, double theta2) {
  return {arm.l1 * std::cos(theta1) + arm.l2 * std::cos(theta1 + theta2),
          arm.l1 * std::sin(theta1) + arm.l2 * std::sin(theta1 + theta2)};
}

IkResult ik_solve(const ArmSpec& arm, const Target& target, double tol) {
  validate(arm);
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

  IkResult result;
  const double r2 = target.x * target.x + target.y * target.y;
  const double outer = (arm.l1 + arm.l2) * (arm.l1 + arm.l2);
  const double inner = (arm.l1 - arm.l2) * (arm.l1 - arm.l2);
  if (r2 > outer + tol || r2 < inner - tol) {
    result.unreachable = true;
    result.diagnostic = "unreachable: target distance^2 " + std::to_string(r2) +
                        " outside reachable annulus [" + std::to_string(inner) + ", " +
                        std::to_string(outer) + "]";
    return result;
  }

  const ArmSpec snapped_arm{snap(arm.l1).to_double(), snap(arm.l2).to_double()};
  const Target snapped_target{snap(target.x).to_double(), snap(target.y).to_double()};
  const auto system = ik_system(arm, target);
  const GroebnerBasis basis = reduced_groebner_basis(system, MonomialOrder::lex);
  if (basis.size() == 1 && basis.generators().front().is_constant()) {
    result.diagnostic = "no solutions: the polynomial system is inconsistent";
    return result;
  }

  for (const Point& p : back_substitute(basis, tol)) {
    const double theta1 = wrap_angle(std::atan2(p[1], p[0]));
    const double theta2 = wrap_angle(std::atan2(p[3], p[2]));
    const auto [sx, sy] = forward_kinematics(snapped_arm, theta1, theta2);
    if (std::hypot(sx - snapped_target.x, sy - snapped_target.y) >= tol) continue;
    const bool duplicate = std::any_of(result.solutions.begin(), result.solutions.end(), [&](const JointSolution& s) {
      return angle_distance(s.theta1, theta1) < tol && angle_distance(s.theta2, theta2) < tol;
    });
    if (duplicate) continue;
    const auto [fx, fy] = forward_kinematics(arm, theta1, theta2);
    result.solutions.push_back({theta1, theta2, std::hypot(fx - target.x, fy - target.y)});
  }
  std::sort(result.solutions.begin(), result.solutions.end(), [](const JointSolution& a, const JointSolution& b) {
    return a.theta1 != b.theta1 ? a.theta1 < b.theta1 : a.theta2 < b.theta2;
  });
  if (result.solutions.empty()) result.diagnostic = "no real solutions";
  return result;
}

std::vector<IkResult> ik_solve_trajectory(const ArmSpec& arm, std::span<const Target> targets, double tol) {
  std::vector<IkResult> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    try {
      out.push_back(ik_solve(arm, t, tol));
    } catch (const std::domain_error& e) {
      IkResult r;
      r.diagnostic = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace gbkit::kinematics
