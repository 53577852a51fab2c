#pragma once

#include <vector>

#include "htsim/basis.hpp"
#include "htsim/fock_state.hpp"

namespace htsim {

/// Search window for the states V may create: created modes are confined to
/// |n| <= maxAbsMode and image energies to maxImageEnergy (plus slack).
/// Images outside a basis are dropped by the caller's index lookup, so the
/// window is a completeness bound, not a physics knob.
struct InteractionWindow {
  int maxAbsMode = 0;
  double maxImageEnergy = 0.0;

  static InteractionWindow forBasis(const TruncatedBasis& basis) {
    return {basis.modeWindow(), basis.maxEnergy()};
  }
};

struct ImageTerm {
  FockState state;
  double amplitude;
};

/// Expands V|s> over Fock states: every momentum-conserving mode quadruple of
/// the five normal-ordered monomial classes (weights 1,4,6,4,1), with the
/// (gL/4) * prod (L omega)^(-1/2) prefactor and exact ladder factors.
/// Amplitudes of identical images are merged; order is deterministic.
std::vector<ImageTerm> applyInteraction(const FockState& source, const ModelParams& params,
                                        const InteractionWindow& window);

/// <bra|V|ket> between parity-projected states, folding the 2x2 orbit
/// combinations through parity invariance of V.
double matrixElementV(const ParityClass& bra, const ParityClass& ket, const ModelParams& params,
                      const InteractionWindow& window);

/// Shared fold: 2*betaBra*betaKet*(c_r + c_Pr), where c_r, c_Pr are the raw
/// amplitudes of V|ket-representative> on the bra orbit members.
inline double foldParityElement(double betaBra, double betaKet, double cRep, double cParityRep) {
  return 2.0 * betaBra * betaKet * (cRep + cParityRep);
}

}  // namespace htsim
