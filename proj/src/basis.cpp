#include "htsim/basis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace htsim {
namespace {

// Shared recursive walk over occupation patterns. Modes are visited in
// descending |n| order (+W, -W, ..., +1, -1, 0), so the momentum still to be
// cancelled is bounded by the leftover energy times the next mode's
// momentum-per-energy ratio, which shrinks as the walk descends.
class SectorWalker {
 public:
  SectorWalker(const ModelParams& params, double eMax, const EnumerationOptions& opts)
      : params_(params), eMax_(eMax), opts_(opts), window_(modeWindowForCutoff(params, eMax)) {
    for (int n = window_; n >= 1; --n) {
      modes_.push_back(n);
      modes_.push_back(-n);
    }
    modes_.push_back(0);
    omega_.reserve(modes_.size());
    for (int m : modes_) omega_.push_back(modeEnergy(m, params_));
    momentumPerEnergy_.assign(modes_.size() + 1, 0.0);
    for (std::size_t i = modes_.size(); i-- > 0;)
      momentumPerEnergy_[i] =
          std::max(momentumPerEnergy_[i + 1], std::abs(modes_[i]) / omega_[i]);
  }

  template <typename Visitor>
  void run(Visitor&& visit) {
    nodes_ = 0;
    FockState current;
    walk(0, 0.0, 0, 0, current, visit);
  }

  int window() const { return window_; }

 private:
  template <typename Visitor>
  void finish(const FockState& current, double energy, std::int64_t momentum, int particles,
              Visitor& visit) {
    if (momentum != 0) return;
    if (opts_.evenParticleNumberOnly && particles % 2 != 0) return;
    if (!isCanonicalRepresentative(current)) return;
    visit(current, energy);
  }

  template <typename Visitor>
  void walk(std::size_t idx, double energy, std::int64_t momentum, int particles,
            FockState& current, Visitor& visit) {
    if (++nodes_ > opts_.nodeBudget)
      throw BudgetExceeded("basis enumeration exceeded its node budget");
    const double budget = eMax_ - energy;
    // Every particle costs at least M; once none is affordable the state is
    // final regardless of the modes not yet visited.
    if (idx == modes_.size() || budget < params_.mass) {
      finish(current, energy, momentum, particles, visit);
      return;
    }
    // Remaining modes can shift momentum by at most budget * (|n|/omega_n).
    if (std::abs(static_cast<double>(momentum)) > budget * momentumPerEnergy_[idx] + 1e-9) return;

    const int mode = modes_[idx];
    const double w = omega_[idx];
    walk(idx + 1, energy, momentum, particles, current, visit);
    int r = 0;
    double e = energy;
    while (e + w <= eMax_) {
      ++r;
      e += w;
      current.setOccupation(mode, r);
      walk(idx + 1, e, momentum + static_cast<std::int64_t>(mode) * r, particles + r, current,
           visit);
    }
    if (r > 0) current.setOccupation(mode, 0);
  }

  const ModelParams& params_;
  double eMax_;
  const EnumerationOptions& opts_;
  int window_;
  std::vector<int> modes_;
  std::vector<double> omega_;
  std::vector<double> momentumPerEnergy_;  // suffix maxima
  std::uint64_t nodes_ = 0;
};

struct StopEnumeration {};

// min(sector count, cap); aborts the walk once cap states are seen.
std::uint64_t countUpTo(const ModelParams& params, double eMax, const EnumerationOptions& opts,
                        std::uint64_t cap) {
  SectorWalker walker(params, eMax, opts);
  std::uint64_t count = 0;
  try {
    walker.run([&](const FockState&, double) {
      if (++count >= cap) throw StopEnumeration{};
    });
  } catch (const StopEnumeration&) {
  }
  return count;
}

std::vector<ParityClass> collectSector(const ModelParams& params, double eMax,
                                       const EnumerationOptions& opts) {
  SectorWalker walker(params, eMax, opts);
  std::vector<std::pair<double, ParityClass>> found;
  walker.run([&](const FockState& s, double energy) {
    found.push_back({energy, ParityClass{s, s == parityImage(s)}});
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return canonicalOrder(a.second.representative, b.second.representative) < 0;
  });
  std::vector<ParityClass> states;
  states.reserve(found.size());
  for (auto& f : found) states.push_back(std::move(f.second));
  return states;
}

}  // namespace

int modeWindowForCutoff(const ModelParams& params, double eMax) {
  if (eMax <= params.mass) return 0;
  const double kMax = std::sqrt(eMax * eMax - params.mass * params.mass);
  int w = static_cast<int>(std::floor(kMax * params.circumference / (2.0 * std::numbers::pi)));
  // Guard against the floor landing one off after rounding.
  while (w > 0 && modeEnergy(w, params) > eMax) --w;
  while (modeEnergy(w + 1, params) <= eMax) ++w;
  return w;
}

TruncatedBasis::TruncatedBasis(ModelParams params, TruncationSpec spec, EnumerationOptions opts,
                               std::vector<ParityClass> states, int modeWindow,
                               bool degenerateBoundary)
    : params_(params),
      spec_(spec),
      opts_(opts),
      states_(std::move(states)),
      modeWindow_(modeWindow),
      degenerateBoundary_(degenerateBoundary) {
  energies_.reserve(states_.size());
  particleNumbers_.reserve(states_.size());
  index_.reserve(states_.size());
  for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
    energies_.push_back(stateEnergy(states_[i].representative, params_));
    particleNumbers_.push_back(states_[i].representative.particleNumber());
    index_.emplace(states_[i].representative, i);
  }
}

std::optional<int> TruncatedBasis::indexOf(const FockState& s) const {
  auto it = index_.find(canonicalRepresentative(s));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int TruncatedBasis::qubitCount() const {
  if (states_.size() <= 1) return 0;
  return std::bit_width(states_.size() - 1);
}

TruncatedBasis enumerateBasis(const ModelParams& params, const TruncationSpec& spec,
                              const EnumerationOptions& opts) {
  params.validate();
  if (spec.mode() == TruncationSpec::Mode::EnergyCutoff) {
    auto states = collectSector(params, spec.eMax(), opts);
    return TruncatedBasis(params, spec, opts, std::move(states),
                          modeWindowForCutoff(params, spec.eMax()), false);
  }

  // QubitCount: grow an internal cutoff until the sector is large enough,
  // tighten it by bisection, then keep the lowest 2^nQubits states.
  const std::uint64_t target = 1ull << spec.nQubits();
  const double hardCeiling = 1e6 * params.mass;
  double lo = 0.0;
  double eMax = 2.5 * params.mass;
  while (countUpTo(params, eMax, opts, target) < target) {
    lo = eMax;
    eMax *= 1.5;
    if (eMax > hardCeiling)
      throw CutoffTooSmall("QubitCount truncation: sector has fewer than 2^n_q states below ceiling");
  }
  for (int iter = 0; iter < 8 && (eMax - lo) > 0.02 * eMax; ++iter) {
    const double mid = 0.5 * (lo + eMax);
    if (countUpTo(params, mid, opts, target) >= target)
      eMax = mid;
    else
      lo = mid;
  }
  auto states = collectSector(params, eMax, opts);
  bool degenerate = false;
  if (states.size() > target) {
    const double lastKept = stateEnergy(states[target - 1].representative, params);
    const double firstDropped = stateEnergy(states[target].representative, params);
    degenerate = std::abs(firstDropped - lastKept) <= 1e-12 * std::max(1.0, std::abs(lastKept));
    states.resize(target);
  }
  double keptMax = states.empty() ? 0.0 : stateEnergy(states.back().representative, params);
  return TruncatedBasis(params, spec, opts, std::move(states), modeWindowForCutoff(params, keptMax),
                        degenerate);
}

std::uint64_t countBasisStates(const ModelParams& params, double eMax,
                               const EnumerationOptions& opts) {
  params.validate();
  SectorWalker walker(params, eMax, opts);
  std::uint64_t count = 0;
  walker.run([&](const FockState&, double) { ++count; });
  return count;
}

}  // namespace htsim
