#ifndef SDCLIQUE_STEPSIZE_HPP
#define SDCLIQUE_STEPSIZE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace sdc {

enum class StepRule { s1_fixed, armijo, exact };

/// Norm of d in the (S1) lower bound used by the fixed rule.
enum class StepNorm { l1, l2 };

inline StepNorm parse_step_norm(std::string_view s) {
  if (s == "l1")
    return StepNorm::l1;
  if (s == "l2")
    return StepNorm::l2;
  throw std::invalid_argument("unknown norm: " + std::string(s));
}

inline std::string_view to_string(StepNorm n) { return n == StepNorm::l1 ? "l1" : "l2"; }

inline std::string_view to_string(StepRule r) {
  switch (r) {
  case StepRule::s1_fixed: return "s1";
  case StepRule::armijo: return "armijo";
  case StepRule::exact: return "exact";
  }
  return "unknown";
}

inline StepRule parse_step_rule(std::string_view s) {
  if (s == "s1" || s == "s1_fixed")
    return StepRule::s1_fixed;
  if (s == "armijo")
    return StepRule::armijo;
  if (s == "exact")
    return StepRule::exact;
  throw std::invalid_argument("unknown stepsize rule: " + std::string(s));
}

struct StepsizeConfig {
  StepRule rule = StepRule::s1_fixed;
  StepNorm norm = StepNorm::l1;
  double C_const = 2.0;  // 1 / L_est
  double L_est = 0.5;
  double c1 = 1e-4;
  double gamma = 0.5;
  double rho = 0.5;
  unsigned max_backtracks = 100;

  void validate() const {
    if (!(C_const > 0.0))
      throw std::invalid_argument("C must be positive");
    if (!(c1 > 0.0 && c1 < 1.0))
      throw std::invalid_argument("c1 must lie in (0,1)");
    if (!(gamma > 0.0 && gamma < 1.0))
      throw std::invalid_argument("gamma must lie in (0,1)");
  }
};

/// Constants for which the (S1)/(S2) conditions are guaranteed.
struct SufficientIncreaseConstants {
  double C_const;
  double rho;
};

inline SufficientIncreaseConstants armijo_constants(double L, double c1, double gamma) {
  return {2.0 * gamma * (1.0 - c1) / L, c1 * std::min(1.0, 2.0 * gamma * (1.0 - c1))};
}

inline SufficientIncreaseConstants exact_constants(double L) { return {1.0 / L, 0.5}; }

/// min(alpha_max, C * slope / |d|^2).
inline double s1_step(double slope, double dir_norm_sq, double alpha_max, double C_const) {
  if (!(slope > 0.0))
    throw std::invalid_argument("s1_step: direction is not an ascent direction");
  if (!(dir_norm_sq > 0.0) || !(alpha_max > 0.0))
    throw std::invalid_argument("s1_step: degenerate direction");
  return std::min(alpha_max, C_const * slope / dir_norm_sq);
}

/// Backtracking from alpha_max by gamma until
///   phi(a) - phi(0) >= c1 a slope.
/// `increase(a)` must return phi(a) - phi(0).
template <class Increase>
double armijo(Increase&& increase, double slope, double alpha_max, double c1, double gamma,
              unsigned max_backtracks = 100) {
  if (!(slope > 0.0))
    throw std::invalid_argument("armijo: direction is not an ascent direction");
  double a = alpha_max;
  for (unsigned j = 0; j <= max_backtracks; ++j, a *= gamma)
    if (increase(a) >= c1 * a * slope)
      return a;
  throw std::runtime_error("armijo: backtracking limit exceeded");
}

namespace detail {

/// Roots of the monotone function f on [lo, hi] when it changes sign there.
template <class F>
void bisect_root(F&& f, double lo, double hi, std::vector<double>& out) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) {
    out.push_back(lo);
    return;
  }
  if (fhi == 0.0) {
    out.push_back(hi);
    return;
  }
  if ((flo > 0.0) == (fhi > 0.0))
    return;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  out.push_back(0.5 * (lo + hi));
}

/// Stationary points of phi in the open interval (0, amax).
inline std::vector<double> critical_points(const Cubic& phi, double amax) {
  std::vector<double> roots;
  const double a = 3.0 * phi.c3, b = 2.0 * phi.c2, c = phi.c1;
  const bool degenerate = std::abs(phi.c3) < 1e-14 * std::abs(phi.c2) || (phi.c3 == 0.0);
  if (!degenerate) {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      if (q != 0.0) {
        roots.push_back(q / a);
        roots.push_back(c / q);
      } else {
        roots.push_back(0.0);
      }
    }
  } else {
    // phi' is monotone on each side of its vertex; bisect the pieces.
    auto dphi = [&](double t) { return phi.derivative(t); };
    double split = (a != 0.0) ? -b / (2.0 * a) : -1.0;
    if (split > 0.0 && split < amax) {
      bisect_root(dphi, 0.0, split, roots);
      bisect_root(dphi, split, amax, roots);
    } else {
      bisect_root(dphi, 0.0, amax, roots);
    }
  }
  std::vector<double> inside;
  for (double r : roots)
    if (std::isfinite(r) && r > 0.0 && r < amax)
      inside.push_back(r);
  return inside;
}

} // namespace detail

/// Largest global maximizer of the cubic phi over [0, alpha_max].
inline double exact_line_search(const Cubic& phi, double alpha_max) {
  if (!(alpha_max > 0.0))
    throw std::invalid_argument("exact_line_search: alpha_max must be positive");
  std::vector<double> cand = detail::critical_points(phi, alpha_max);
  cand.push_back(0.0);
  cand.push_back(alpha_max);
  std::sort(cand.begin(), cand.end());
  double best_a = 0.0;
  double best_v = phi(0.0);
  for (double a : cand) {
    const double v = phi(a);
    if (v >= best_v) {
      best_v = v;
      best_a = a;
    }
  }
  return best_a;
}

struct S1S2Check {
  bool s1;
  bool s2;
};

inline S1S2Check verify_s1_s2(double slope, double dir_norm_sq, double alpha_max, double alpha_used,
                              double delta_f, double C_const, double rho) {
  constexpr double slack = 1e-12;
  const double abar = std::min(alpha_max, C_const * slope / dir_norm_sq);
  return {alpha_used >= abar - slack, delta_f >= rho * abar * slope - slack};
}

/// Stepsize for one iteration, given the line polynomial along d and the
/// squared l2 and plain l1 norms of d.
inline double choose_step(const StepsizeConfig& cfg, const Cubic& phi, double slope, double dir_norm_sq,
                          double dir_l1, double alpha_max) {
  switch (cfg.rule) {
  case StepRule::s1_fixed:
    return s1_step(slope, cfg.norm == StepNorm::l1 ? dir_l1 * dir_l1 : dir_norm_sq, alpha_max, cfg.C_const);
  case StepRule::armijo:
    return armijo([&](double a) { return phi(a) - phi.c0; }, slope, alpha_max, cfg.c1, cfg.gamma,
                  cfg.max_backtracks);
  case StepRule::exact:
    return exact_line_search(phi, alpha_max);
  }
  throw std::logic_error("unknown step rule");
}

} // namespace sdc

#endif // SDCLIQUE_STEPSIZE_HPP
