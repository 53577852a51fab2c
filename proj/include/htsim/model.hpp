#pragma once

#include <cmath>
#include <numbers>

#include "htsim/errors.hpp"

namespace htsim {

/// Parameters of the scalar theory on a circle: mass M, circumference L and
/// quartic coupling g (units of energy, 1/energy and energy^2 respectively).
struct ModelParams {
  double mass = 1.0;
  double circumference = 16.0;
  double coupling = 1.0;

  void validate() const {
    if (!(mass > 0)) throw Error("ModelParams: mass must be positive");
    if (!(circumference > 0)) throw Error("ModelParams: circumference must be positive");
    if (coupling < 0) throw Error("ModelParams: coupling must be non-negative");
  }
};

struct Dispersion {
  double momentum;  // k_n
  double energy;    // omega_n
};

/// k_n = 2*pi*n/L, omega_n = sqrt(k_n^2 + M^2).
inline Dispersion dispersion(int mode, const ModelParams& p) {
  const double k = 2.0 * std::numbers::pi * static_cast<double>(mode) / p.circumference;
  return {k, std::sqrt(k * k + p.mass * p.mass)};
}

inline double modeEnergy(int mode, const ModelParams& p) { return dispersion(mode, p).energy; }

}  // namespace htsim
