#include "htsim/wavepacket.hpp"

#include <cmath>
#include <sstream>

namespace htsim {

std::map<int, int> pairIndexTable(const TruncatedBasis& basis) {
  std::map<int, int> table;
  for (int i = 0; i < basis.size(); ++i) {
    const FockState& rep = basis.state(i).representative;
    const auto& entries = rep.entries();
    if (rep.particleNumber() != 2) continue;
    if (entries.size() == 1 && entries[0].first == 0) {
      table[0] = i;  // {0:2}
    } else if (entries.size() == 2 && entries[0].first == -entries[1].first &&
               entries[0].second == 1 && entries[1].second == 1) {
      table[entries[1].first] = i;  // {m:1, -m:1}, canonical rep has m > 0 second
    }
  }
  return table;
}

StateVector twoPacketState(const TruncatedBasis& basis, const WavepacketSpec& spec) {
  spec.validate();
  const auto table = pairIndexTable(basis);
  if (table.empty()) throw EmptySupport("twoPacketState: basis has no two-particle pair state");

  StateVector psi;
  psi.basis = &basis;
  psi.amplitudes = Eigen::VectorXcd::Zero(basis.size());
  const double d2 = spec.delta * spec.delta;
  for (const auto& [m, idx] : table) {
    double c;
    if (m == 0) {
      c = std::numbers::sqrt2 * std::exp(-spec.p0 * spec.p0 * d2);
    } else {
      const double km = dispersion(m, basis.params()).momentum;
      const double minus = spec.p0 - km;
      const double plus = spec.p0 + km;
      c = (m % 2 == 0 ? 1.0 : -1.0) *
          (std::exp(-minus * minus * d2) + std::exp(-plus * plus * d2));
    }
    psi.amplitudes[idx] = c;
  }
  const double n = psi.amplitudes.norm();
  if (n == 0.0) throw EmptySupport("twoPacketState: all packet amplitudes underflowed to zero");
  psi.amplitudes /= n;
  return psi;
}

std::optional<std::string> packetWidthAdvisory(const WavepacketSpec& spec, double circumference) {
  // "Much less" read as a factor of ~3 for the advisory.
  const bool lowOk = spec.delta * spec.p0 >= 3.0;
  const bool highOk = spec.delta * 3.0 <= circumference;
  if (lowOk && highOk) return std::nullopt;
  std::ostringstream msg;
  msg << "wavepacket width advisory: 1/p0 << delta << L not comfortably satisfied "
      << "(1/p0=" << 1.0 / spec.p0 << ", delta=" << spec.delta << ", L=" << circumference << ")";
  return msg.str();
}

}  // namespace htsim
