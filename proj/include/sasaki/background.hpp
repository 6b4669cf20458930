#pragma once

// Background potentials of the round metric in the chart s = log|z|^2.
//
// f0(s) = log(1 + e^s) is the full Kaehler potential of the background form
// (total area 2*pi); its derivative x = f0'(s) is the moment coordinate and
// u0(x) = x log x + (1 - x) log(1 - x) is its Legendre conjugate.

#include <cmath>

namespace sasaki::background {

inline double softplus(double s) {
  return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s));
}

inline double sigmoid(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

inline double logit(double x) { return std::log(x) - std::log1p(-x); }

inline double f0(double s) { return softplus(s); }
inline double f0_d1(double s) { return sigmoid(s); }

inline double f0_d2(double s) {
  const double e = std::exp(-std::abs(s));
  return e / ((1.0 + e) * (1.0 + e));
}

inline double f0_d3(double s) {
  const double p = sigmoid(s);
  return p * (1.0 - p) * (1.0 - 2.0 * p);
}

/// u0 evaluated through its logit y, stable as x approaches 0 or 1.
inline double u0_from_logit(double y) {
  const double x = sigmoid(y);
  return x * y - softplus(y);
}

inline double u0(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return x * std::log(x) + (1.0 - x) * std::log1p(-x);
}

}  // namespace sasaki::background
