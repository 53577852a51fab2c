#pragma once

#include <Eigen/Dense>
#include <map>

#include "htsim/state_vector.hpp"

namespace htsim {

/// Relative wavefunction of two indistinguishable free particles on the
/// circle, as a function of their separation y in [0, L/2]:
/// sqrt(2/L) for n = 0, (2/sqrt(L)) cos(k_n y) otherwise.
double pairWavefunction(int n, double y, const ModelParams& params);

/// <rho(y)> on a uniform grid over [0, L/2]. Only pair-state amplitudes
/// contribute; for states with weight outside the two-particle sector the
/// integral reports twoParticleWeight instead of 1.
struct SeparationDensity {
  Eigen::VectorXd gridY;
  Eigen::VectorXd values;
  double twoParticleWeight = 0.0;

  /// Trapezoidal integral over the grid.
  double integral() const;
  /// Trapezoidal first moment: integral of y * rho(y).
  double firstMoment() const;
};

SeparationDensity separationDensity(const StateVector& psi, int gridSize = 512);

/// Probability per particle number; keys are the particle numbers present in
/// the basis.
using OccupationHistogram = std::map<int, double>;

OccupationHistogram occupationHistogram(const StateVector& psi);

}  // namespace htsim
