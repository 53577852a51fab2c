#include "htsim/interaction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

namespace htsim {
namespace {

// Binomial weights of the five normal-ordered monomial classes in V,
// indexed by the number of creation operators.
constexpr std::array<double, 5> kClassWeight = {1.0, 4.0, 6.0, 4.0, 1.0};
constexpr std::array<double, 5> kFactorial = {1.0, 1.0, 2.0, 6.0, 24.0};

struct Multiset4 {
  std::array<int, 4> modes{};
  int size = 0;

  void push(int m) { modes[size++] = m; }
  void pop() { --size; }

  // Number of distinct orderings: size! / prod(multiplicities!).
  double permutations() const {
    double denom = 1.0;
    int run = 1;
    for (int i = 1; i < size; ++i) {
      if (modes[i] == modes[i - 1]) {
        ++run;
        denom *= run;
      } else {
        run = 1;
      }
    }
    return kFactorial[size] / denom;
  }
};

class InteractionExpander {
 public:
  InteractionExpander(const FockState& source, const ModelParams& params,
                      const InteractionWindow& window)
      : source_(source), params_(params), window_(window) {
    sourceEnergy_ = stateEnergy(source, params);
    energyCap_ = window.maxImageEnergy * (1.0 + 1e-12) + 1e-12;
    const int w = window.maxAbsMode;
    omega_.resize(2 * w + 1);
    invSqrtLOmega_.resize(2 * w + 1);
    for (int n = -w; n <= w; ++n) {
      const double om = modeEnergy(n, params);
      omega_[n + w] = om;
      invSqrtLOmega_[n + w] = 1.0 / std::sqrt(params.circumference * om);
    }
  }

  std::vector<ImageTerm> run() {
    for (int creators = 0; creators <= 4; ++creators) {
      creators_ = creators;
      Multiset4 ann;
      enumerateAnnihilations(0, ann, 1.0, 0.0, 0);
    }
    std::vector<ImageTerm> out;
    out.reserve(images_.size());
    for (auto& [state, amp] : images_)
      if (amp != 0.0) out.push_back({state, amp});
    std::sort(out.begin(), out.end(), [](const ImageTerm& a, const ImageTerm& b) {
      return canonicalOrder(a.state, b.state) < 0;
    });
    return out;
  }

 private:
  double omega(int n) const { return omega_[n + window_.maxAbsMode]; }
  double invSqrtLOmega(int n) const { return invSqrtLOmega_[n + window_.maxAbsMode]; }

  // Non-decreasing multisets of annihilated modes, drawn from the occupied
  // modes of the source. ladder2 tracks the product of falling factorials.
  void enumerateAnnihilations(std::size_t entryIdx, Multiset4& ann, double ladder2,
                              double removedEnergy, std::int64_t removedMomentum) {
    if (ann.size == 4 - creators_) {
      finishAnnihilation(ann, ladder2, removedEnergy, removedMomentum);
      return;
    }
    const auto& entries = source_.entries();
    if (entryIdx >= entries.size()) return;
    // Skip this mode entirely.
    enumerateAnnihilations(entryIdx + 1, ann, ladder2, removedEnergy, removedMomentum);
    const auto [mode, occ] = entries[entryIdx];
    const double om = modeEnergy(mode, params_);
    double l2 = ladder2;
    double e = removedEnergy;
    std::int64_t p = removedMomentum;
    const int maxTake = std::min(occ, 4 - creators_ - ann.size);
    for (int t = 1; t <= maxTake; ++t) {
      l2 *= static_cast<double>(occ - t + 1);
      e += om;
      p += mode;
      ann.push(mode);
      enumerateAnnihilations(entryIdx + 1, ann, l2, e, p);
    }
    for (int t = 0; t < maxTake; ++t) ann.pop();
  }

  void finishAnnihilation(const Multiset4& ann, double ladder2, double removedEnergy,
                          std::int64_t removedMomentum) {
    // Created modes must restore the removed momentum.
    base_ = source_;
    for (int i = 0; i < ann.size; ++i) base_.addOccupation(ann.modes[i], -1);
    baseEnergy_ = sourceEnergy_ - removedEnergy;

    double pref = kClassWeight[creators_] * ann.permutations() * std::sqrt(ladder2);
    pref *= 0.25 * params_.coupling * params_.circumference;
    for (int i = 0; i < ann.size; ++i) pref *= invSqrtLOmega(ann.modes[i]);

    Multiset4 cre;
    enumerateCreations(cre, -window_.maxAbsMode, removedMomentum, baseEnergy_, 1.0, pref);
  }

  // Non-decreasing multisets of created modes with fixed total momentum.
  void enumerateCreations(Multiset4& cre, int minMode, std::int64_t momentumLeft, double energy,
                          double ladder2, double pref) {
    const int slotsLeft = creators_ - cre.size;
    if (slotsLeft == 0) {
      if (momentumLeft != 0) return;
      emit(cre, ladder2, pref);
      return;
    }
    const int w = window_.maxAbsMode;
    // Non-decreasing sequence: remaining slots each lie in [p, w], so
    // p >= momentumLeft - (slotsLeft-1)*w and slotsLeft*p <= momentumLeft.
    const std::int64_t lo64 =
        std::max<std::int64_t>(minMode, momentumLeft - static_cast<std::int64_t>(slotsLeft - 1) * w);
    const std::int64_t hi64 =
        std::min<std::int64_t>(w, std::floor(static_cast<double>(momentumLeft) / slotsLeft));
    for (std::int64_t p64 = lo64; p64 <= hi64; ++p64) {
      const int p = static_cast<int>(p64);
      const double om = omega(p);
      // Each remaining slot costs at least omega(max(p, 0)).
      const double minFuture = (slotsLeft - 1) * omega(std::max(p, 0));
      if (energy + om + minFuture > energyCap_) continue;
      const int prior = base_.occupation(p) + countOf(cre, p);
      cre.push(p);
      enumerateCreations(cre, p, momentumLeft - p, energy + om, ladder2 * (prior + 1),
                         pref * invSqrtLOmega(p));
      cre.pop();
    }
  }

  static int countOf(const Multiset4& ms, int mode) {
    int c = 0;
    for (int i = 0; i < ms.size; ++i)
      if (ms.modes[i] == mode) ++c;
    return c;
  }

  void emit(const Multiset4& cre, double ladder2, double pref) {
    FockState image = base_;
    for (int i = 0; i < cre.size; ++i) image.addOccupation(cre.modes[i], 1);
    images_[image] += pref * cre.permutations() * std::sqrt(ladder2);
  }

  const FockState& source_;
  const ModelParams& params_;
  const InteractionWindow& window_;
  double sourceEnergy_ = 0.0;
  double energyCap_ = 0.0;
  int creators_ = 0;
  FockState base_;
  double baseEnergy_ = 0.0;
  std::vector<double> omega_;
  std::vector<double> invSqrtLOmega_;
  std::unordered_map<FockState, double, FockStateHash> images_;
};

}  // namespace

std::vector<ImageTerm> applyInteraction(const FockState& source, const ModelParams& params,
                                        const InteractionWindow& window) {
  if (params.coupling == 0.0) return {};
  InteractionExpander expander(source, params, window);
  return expander.run();
}

double matrixElementV(const ParityClass& bra, const ParityClass& ket, const ModelParams& params,
                      const InteractionWindow& window) {
  const auto images = applyInteraction(ket.representative, params, window);
  const FockState braRep = bra.representative;
  const FockState braMirror = parityImage(braRep);
  double cRep = 0.0;
  double cMirror = 0.0;
  for (const auto& term : images) {
    if (term.state == braRep) cRep = term.amplitude;
    if (term.state == braMirror) cMirror = term.amplitude;
  }
  if (bra.selfConjugate) cMirror = cRep;
  return foldParityElement(bra.beta(), ket.beta(), cRep, cMirror);
}

}  // namespace htsim
