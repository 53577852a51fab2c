#include "htsim/fock_state.hpp"

#include <algorithm>

namespace htsim {

FockState::FockState(std::initializer_list<Entry> occupations) {
  for (const auto& [mode, occ] : occupations) setOccupation(mode, occ);
}

int FockState::occupation(int mode) const {
  auto it = std::lower_bound(occ_.begin(), occ_.end(), mode,
                             [](const Entry& e, int m) { return e.first < m; });
  return (it != occ_.end() && it->first == mode) ? it->second : 0;
}

void FockState::setOccupation(int mode, int occ) {
  if (occ < 0) throw Error("FockState: negative occupation");
  auto it = std::lower_bound(occ_.begin(), occ_.end(), mode,
                             [](const Entry& e, int m) { return e.first < m; });
  const bool present = it != occ_.end() && it->first == mode;
  if (occ == 0) {
    if (present) occ_.erase(it);
  } else if (present) {
    it->second = occ;
  } else {
    occ_.insert(it, {mode, occ});
  }
}

void FockState::addOccupation(int mode, int delta) {
  setOccupation(mode, occupation(mode) + delta);
}

int FockState::particleNumber() const {
  int n = 0;
  for (const auto& e : occ_) n += e.second;
  return n;
}

std::int64_t FockState::totalMomentum() const {
  std::int64_t p = 0;
  for (const auto& e : occ_) p += static_cast<std::int64_t>(e.first) * e.second;
  return p;
}

int FockState::maxAbsMode() const {
  int m = 0;
  for (const auto& e : occ_) m = std::max(m, std::abs(e.first));
  return m;
}

double stateEnergy(const FockState& s, const ModelParams& p) {
  double e = 0.0;
  for (const auto& [mode, occ] : s.entries()) e += occ * modeEnergy(mode, p);
  return e;
}

FockState parityImage(const FockState& s) {
  FockState out;
  const auto& in = s.entries();
  for (auto it = in.rbegin(); it != in.rend(); ++it) out.setOccupation(-it->first, it->second);
  return out;
}

std::strong_ordering canonicalOrder(const FockState& a, const FockState& b) {
  if (auto c = a.particleNumber() <=> b.particleNumber(); c != 0) return c;
  return a.entries() <=> b.entries();
}

bool isCanonicalRepresentative(const FockState& s) {
  return canonicalOrder(s, parityImage(s)) <= 0;
}

FockState canonicalRepresentative(const FockState& s) {
  FockState p = parityImage(s);
  return canonicalOrder(s, p) <= 0 ? s : p;
}

std::size_t FockStateHash::operator()(const FockState& s) const noexcept {
  // FNV-1a over the entry list.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& [mode, occ] : s.entries()) {
    mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(mode)));
    mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(occ)));
  }
  return static_cast<std::size_t>(h);
}

}  // namespace htsim
