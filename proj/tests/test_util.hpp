#pragma once

#include <cmath>
#include <random>

#include "htsim/fock_state.hpp"

namespace htsim::testutil {

/// |a - b| <= tol * max(1, |a|, |b|): absolute near zero, relative above 1.
inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline FockState randomFockState(std::mt19937& rng, int maxAbsMode = 6, int maxParticles = 6) {
  std::uniform_int_distribution<int> countDist(0, maxParticles);
  std::uniform_int_distribution<int> modeDist(-maxAbsMode, maxAbsMode);
  FockState s;
  const int n = countDist(rng);
  for (int i = 0; i < n; ++i) s.addOccupation(modeDist(rng), 1);
  return s;
}

}  // namespace htsim::testutil
