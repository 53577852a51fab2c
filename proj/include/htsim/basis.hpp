#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "htsim/fock_state.hpp"
#include "htsim/model.hpp"

namespace htsim {

/// Truncation either by a hard H0-energy cutoff or by a target qubit count
/// (keep the 2^nQubits lowest-energy states, canonical-order tie-break).
class TruncationSpec {
 public:
  enum class Mode { EnergyCutoff, QubitCount };

  static TruncationSpec energyCutoff(double eMax) {
    if (!(eMax >= 0)) throw Error("TruncationSpec: eMax must be >= 0");
    TruncationSpec s;
    s.mode_ = Mode::EnergyCutoff;
    s.eMax_ = eMax;
    return s;
  }
  static TruncationSpec qubitCount(int nQubits) {
    if (nQubits < 1) throw Error("TruncationSpec: qubit count must be >= 1");
    TruncationSpec s;
    s.mode_ = Mode::QubitCount;
    s.nQubits_ = nQubits;
    return s;
  }

  Mode mode() const { return mode_; }
  double eMax() const { return eMax_; }
  int nQubits() const { return nQubits_; }

 private:
  TruncationSpec() = default;
  Mode mode_ = Mode::EnergyCutoff;
  double eMax_ = 0.0;
  int nQubits_ = 0;
};

/// Parity orbit {r, Pr} keyed by its canonical representative.
/// beta is the normalization of beta*(|r> + P|r>).
struct ParityClass {
  FockState representative;
  bool selfConjugate = true;

  double beta() const { return selfConjugate ? 0.5 : std::numbers::sqrt2 / 2.0; }
};

struct EnumerationOptions {
  bool evenParticleNumberOnly = false;
  // Hard cap on recursion nodes, to keep runaway cutoffs from hanging a run.
  std::uint64_t nodeBudget = 400'000'000ull;
};

/// Ordered zero-momentum, parity-even truncated eigenbasis of H0.
/// States are sorted by (energy, canonical order); state 0 is the vacuum.
class TruncatedBasis {
 public:
  TruncatedBasis(ModelParams params, TruncationSpec spec, EnumerationOptions opts,
                 std::vector<ParityClass> states, int modeWindow, bool degenerateBoundary);

  int size() const { return static_cast<int>(states_.size()); }
  const ParityClass& state(int i) const { return states_.at(i); }
  double energy(int i) const { return energies_.at(i); }
  int particleNumber(int i) const { return particleNumbers_.at(i); }
  const std::vector<ParityClass>& states() const { return states_; }

  /// Exact lookup; canonicalizes the argument, so any orbit member resolves.
  std::optional<int> indexOf(const FockState& s) const;

  const ModelParams& params() const { return params_; }
  const TruncationSpec& spec() const { return spec_; }
  const EnumerationOptions& options() const { return opts_; }

  /// Largest |mode| any kept state can occupy.
  int modeWindow() const { return modeWindow_; }
  /// Energy of the last kept state.
  double maxEnergy() const { return energies_.empty() ? 0.0 : energies_.back(); }
  /// ceil(log2(size)), the qubit count needed to address the basis.
  int qubitCount() const;

  /// Set in QubitCount mode when the first dropped state is degenerate with
  /// the last kept one.
  bool degenerateBoundary() const { return degenerateBoundary_; }

 private:
  ModelParams params_;
  TruncationSpec spec_;
  EnumerationOptions opts_;
  std::vector<ParityClass> states_;
  std::vector<double> energies_;
  std::vector<int> particleNumbers_;
  std::unordered_map<FockState, int, FockStateHash> index_;
  int modeWindow_ = 0;
  bool degenerateBoundary_ = false;
};

/// Only modes with omega_n <= eMax can appear below the cutoff.
int modeWindowForCutoff(const ModelParams& params, double eMax);

/// Complete, duplicate-free enumeration of the sector. In QubitCount mode the
/// internal energy ceiling doubles until 2^nQubits states exist, then exactly
/// that many lowest states are kept.
TruncatedBasis enumerateBasis(const ModelParams& params, const TruncationSpec& spec,
                              const EnumerationOptions& opts = {});

/// Number of sector states with energy <= eMax, without materializing them.
std::uint64_t countBasisStates(const ModelParams& params, double eMax,
                               const EnumerationOptions& opts = {});

}  // namespace htsim
