#include "oracle_fock.hpp"

#include <array>
#include <cmath>

namespace htsim::oracle {

StateMap applyAnnihilator(int mode, const StateMap& in) {
  StateMap out;
  for (const auto& [state, coef] : in) {
    const int r = state.occupation(mode);
    if (r == 0) continue;
    FockState next = state;
    next.setOccupation(mode, r - 1);
    out[next] += coef * std::sqrt(static_cast<double>(r));
  }
  return out;
}

StateMap applyCreator(int mode, const StateMap& in) {
  StateMap out;
  for (const auto& [state, coef] : in) {
    const int r = state.occupation(mode);
    FockState next = state;
    next.setOccupation(mode, r + 1);
    out[next] += coef * std::sqrt(static_cast<double>(r + 1));
  }
  return out;
}

StateMap applyVRaw(const StateMap& ket, const ModelParams& params, int window) {
  static constexpr std::array<double, 5> weight = {1.0, 4.0, 6.0, 4.0, 1.0};
  StateMap out;
  const double gL4 = 0.25 * params.coupling * params.circumference;
  for (int n2 = -window; n2 <= window; ++n2)
    for (int n3 = -window; n3 <= window; ++n3)
      for (int n4 = -window; n4 <= window; ++n4) {
        const int n1 = -(n2 + n3 + n4);
        if (std::abs(n1) > window) continue;
        const std::array<int, 4> n = {n1, n2, n3, n4};
        double prefactor = gL4;
        for (int mode : n)
          prefactor /= std::sqrt(params.circumference * modeEnergy(mode, params));
        for (int creators = 0; creators <= 4; ++creators) {
          // a^dag_{-n_1} ... a^dag_{-n_c} a_{n_{c+1}} ... a_{n_4}, applied
          // right to left.
          StateMap term = ket;
          for (int pos = 3; pos >= creators; --pos) term = applyAnnihilator(n[pos], term);
          if (term.empty()) continue;
          for (int pos = creators - 1; pos >= 0; --pos) term = applyCreator(-n[pos], term);
          const double w = weight[creators] * prefactor;
          for (const auto& [state, coef] : term) out[state] += w * coef;
        }
      }
  return out;
}

double matrixElement(const ParityClass& bra, const ParityClass& ket, const ModelParams& params,
                     int window) {
  StateMap ketMap;
  ketMap[ket.representative] += ket.beta();
  ketMap[parityImage(ket.representative)] += ket.beta();
  const StateMap image = applyVRaw(ketMap, params, window);
  auto amplitudeOf = [&image](const FockState& s) {
    auto it = image.find(s);
    return it == image.end() ? 0.0 : it->second;
  };
  double value = bra.beta() * amplitudeOf(bra.representative);
  value += bra.beta() * amplitudeOf(parityImage(bra.representative));
  return value;
}

}  // namespace htsim::oracle
