#pragma once

#include <optional>
#include <vector>

#include "htsim/observables.hpp"

namespace htsim {

/// Median gap between successive local maxima of the density that rise above
/// 20% of its global maximum. Empty when fewer than two qualify.
std::optional<double> fringeSpacing(const SeparationDensity& density,
                                    double threshold = 0.2);

/// argmin of the first moment over a sampled trajectory; a scalar proxy for
/// the collision (interaction) time.
struct TrajectorySample {
  double t = 0.0;
  double firstMoment = 0.0;
};

double collisionTime(const std::vector<TrajectorySample>& samples);

}  // namespace htsim
