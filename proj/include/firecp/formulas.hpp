// Closed-form probabilities for fire geometry events. These are exact
// expressions, evaluated directly; the test suites check the engine's
// event frequencies against them.

#ifndef FIRECP_FORMULAS_HPP
#define FIRECP_FORMULAS_HPP

#include <cmath>

#include "firecp/errors.hpp"

namespace firecp {

// Probability that no fire center lands in the enlarged box
// (side F + 2L + 4n + 1) during [0, T+1]: exp(-delta0 * tau) with
// tau = (F + 2L + 4n + 1)^2 (T + 1).
inline double block_unaffected_prob(double delta0, double fire_width, double l,
                                    double n, double t) {
  if (delta0 < 0 || fire_width < 0 || l < 0 || n < 0 || t < 0)
    throw ConfigError("block_unaffected_prob: arguments must be >= 0");
  const double side = fire_width + 2.0 * l + 4.0 * n + 1.0;
  return std::exp(-delta0 * side * side * (t + 1.0));
}

// Probability that a fire clears an interior block of a W-cell during
// [0, T/2] and no fire touches the clearing during [T/2, 4T]:
// (1 - exp(-delta0 (W-F)^2 T/2)) * exp(-14 delta0 F^2 T).
inline double fire_gap_probability(double delta0, double w, double fire_width,
                                   double t) {
  if (w < fire_width || fire_width < 0)
    throw ConfigError("fire_gap_probability: requires W >= F >= 0");
  const double margin = w - fire_width;
  const double clear = -std::expm1(-delta0 * margin * margin * t / 2.0);
  const double stay = std::exp(-14.0 * delta0 * fire_width * fire_width * t);
  return clear * stay;
}

// Lower bound on the probability that a source colonizes a cleared target
// during a window of length T/2, from the minimum spread rate
// u = c2 * beta1 * (4kW)^(-rho) * L^2: returns 1 - exp(-u T/2).
inline double spread_success_bound(double c2, double beta1, double k, double w,
                                   double rho, double l, double t) {
  const double u = c2 * beta1 * std::pow(4.0 * k * w, -rho) * l * l;
  return -std::expm1(-u * t / 2.0);
}

}  // namespace firecp

#endif  // FIRECP_FORMULAS_HPP
