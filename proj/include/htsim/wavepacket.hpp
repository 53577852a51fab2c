#pragma once

#include <map>
#include <optional>
#include <string>

#include "htsim/state_vector.hpp"

namespace htsim {

/// Two back-to-back Gaussian packets with mean momenta +-p0 and momentum-space
/// width parameter delta, centred at 0 and L/2.
struct WavepacketSpec {
  double p0 = 2.5;
  double delta = 0.75;

  void validate() const {
    if (!(p0 > 0)) throw Error("WavepacketSpec: p0 must be positive");
    if (!(delta > 0)) throw Error("WavepacketSpec: delta must be positive");
  }
};

/// Pair-state lookup: m -> basis index of {m:1, -m:1} (m >= 1) or {0:2} (m=0).
std::map<int, int> pairIndexTable(const TruncatedBasis& basis);

/// Free-theory zero-momentum two-packet state over the pair states present in
/// the basis, normalized to unit norm. Amplitudes off pair states are exactly
/// zero. Throws EmptySupport when the basis holds no pair state.
StateVector twoPacketState(const TruncatedBasis& basis, const WavepacketSpec& spec);

/// Advisory width condition 1/p0 << delta << L; returns a warning message
/// when violated (never an error, desk-scale runs violate it on purpose).
std::optional<std::string> packetWidthAdvisory(const WavepacketSpec& spec, double circumference);

}  // namespace htsim
