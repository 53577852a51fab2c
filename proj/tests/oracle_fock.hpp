#pragma once

// Test-only brute-force oracle for the quartic interaction. Works with
// ordered mode quadruples and elementary ladder steps, so it shares no
// enumeration logic with the library implementation it checks.

#include <unordered_map>

#include "htsim/basis.hpp"
#include "htsim/fock_state.hpp"

namespace htsim::oracle {

using StateMap = std::unordered_map<FockState, double, FockStateHash>;

StateMap applyAnnihilator(int mode, const StateMap& in);
StateMap applyCreator(int mode, const StateMap& in);

/// Raw V applied to an arbitrary ket expansion, enumerating every ordered
/// quadruple (n1..n4) with n1+n2+n3+n4 = 0 and |n_i| <= window, all five
/// monomial classes with their written weights.
StateMap applyVRaw(const StateMap& ket, const ModelParams& params, int window);

/// <bra|V|ket> between parity-projected states via the full unprojected
/// expansion of both sides.
double matrixElement(const ParityClass& bra, const ParityClass& ket, const ModelParams& params,
                     int window);

}  // namespace htsim::oracle
