#include "htsim/resources.hpp"

#include <bit>
#include <cmath>

#include "htsim/assemble.hpp"

namespace htsim {
namespace {

int qubitsForDimension(std::uint64_t dim) {
  if (dim <= 1) return 0;
  return std::bit_width(dim - 1);
}

}  // namespace

int htQubitsVsEmax(const ModelParams& params, double eMax, const EnumerationOptions& opts) {
  return qubitsForDimension(countBasisStates(params, eMax, opts));
}

int latticeQubitsVsEmax(int nQubitsPerSite, double dimlessVolume, double dimlessEmax) {
  if (nQubitsPerSite < 1 || !(dimlessVolume > 0) || !(dimlessEmax > 0))
    throw Error("latticeQubitsVsEmax: inputs must be positive");
  return static_cast<int>(std::llround(nQubitsPerSite * dimlessVolume * dimlessEmax));
}

double htTruncationError(double g, double m, double eMax) {
  const double fourFactorial = 24.0;
  return fourFactorial * fourFactorial * g * g /
         (4.0 * std::numbers::pi * eMax * eMax * m * m);
}

double eMaxForTruncationError(double epsilon, double g, double m) {
  return 24.0 * g / (m * std::sqrt(4.0 * std::numbers::pi * epsilon));
}

double interparticlePotential(double r, double g, double m) {
  if (!(r > 0)) throw Error("interparticlePotential: r must be positive");
  return -18.0 * g * g / (m * m * m) / std::sqrt(std::numbers::pi * m * r) * std::exp(-2.0 * m * r);
}

double interparticleForce(double r, double g, double m) {
  if (!(r > 0)) throw Error("interparticleForce: r must be positive");
  const double prefactor = 18.0 * g * g / (m * m * m) / std::sqrt(std::numbers::pi * m);
  return prefactor * std::exp(-2.0 * m * r) * (0.5 * std::pow(r, -1.5) + 2.0 * m / std::sqrt(r));
}

MinVolumeResult minVolumeForEpsilon(double epsilon, double m) {
  if (!(epsilon > 0 && epsilon < 1)) throw Error("minVolumeForEpsilon: epsilon must be in (0,1)");
  // The coupling cancels in the ratio; evaluate at g = 1.
  const double fRef = interparticleForce(1.0 / m, 1.0, m);
  auto ratio = [&](double r) { return interparticleForce(r, 1.0, m) / fRef; };

  MinVolumeResult result;
  double lo = 1.0 / m;
  if (ratio(lo) <= epsilon) {
    result.bracketed = false;
    result.separation = lo;
    result.volume = 6.0 * lo;
    return result;
  }
  double hi = 2.0 / m;
  while (ratio(hi) > epsilon) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6 / m) throw Error("minVolumeForEpsilon: bracket search ran away");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (ratio(mid) > epsilon)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo) <= 1e-10 * hi) break;
  }
  result.separation = 0.5 * (lo + hi);
  result.volume = 6.0 * result.separation;
  return result;
}

double latticeSpacingForError(double epsilon, double m) {
  if (!(epsilon > 0)) throw Error("latticeSpacingForError: epsilon must be positive");
  return std::sqrt(epsilon) / (2.0 * m);
}

int latticeQubitsPerSite(double epsilon, double sqrtS, double volume, double spacing, double m) {
  if (!(epsilon > 0) || !(sqrtS > 0) || !(volume > 0) || !(spacing > 0) || !(m > 0))
    throw Error("latticeQubitsPerSite: inputs must be positive");
  const double bracket = 1.0 + std::sqrt(volume / (spacing * epsilon));
  const double arg = 1.0 + 4.0 * sqrtS / (m * std::numbers::pi) * bracket * bracket;
  return static_cast<int>(std::ceil(std::log2(arg)));
}

std::vector<PrecisionRow> precisionComparison(const std::vector<double>& epsilonGrid,
                                              const PrecisionCompareOptions& options) {
  if (epsilonGrid.empty()) throw Error("precisionComparison: empty epsilon grid");
  std::vector<PrecisionRow> rows;
  rows.reserve(epsilonGrid.size());
  for (double eps : epsilonGrid) {
    PrecisionTarget{eps, options.sqrtS}.validate();
    PrecisionRow row;
    row.epsilon = eps;
    row.eMax = eMaxForTruncationError(eps, options.g, options.m);
    row.volume = minVolumeForEpsilon(eps, options.m).volume;
    row.spacing = latticeSpacingForError(eps, options.m);
    row.latticeQubitsPerSiteValue =
        latticeQubitsPerSite(eps, options.sqrtS, row.volume, row.spacing, options.m);
    row.latticeSites = static_cast<std::int64_t>(std::ceil(row.volume / row.spacing));
    row.latticeQubits = row.latticeQubitsPerSiteValue * row.latticeSites;
    ModelParams params{options.m, row.volume, options.g};
    row.htDimension = countBasisStates(params, row.eMax, options.enumeration);
    row.htQubits = qubitsForDimension(row.htDimension);
    rows.push_back(row);
  }
  return rows;
}

SparsityFit fitSparsityScaling(const std::vector<SparsityPoint>& points, int excludeSmallest) {
  if (static_cast<int>(points.size()) < 7)
    throw InsufficientPoints("fitSparsityScaling: need at least 7 basis sizes");
  std::vector<SparsityPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const SparsityPoint& a, const SparsityPoint& b) { return a.nQubits < b.nQubits; });
  if (static_cast<int>(sorted.size()) - excludeSmallest < 2)
    throw InsufficientPoints("fitSparsityScaling: not enough points after exclusion");

  SparsityFit fit;
  fit.excluded = excludeSmallest;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(sorted.size()) - excludeSmallest;
  for (int i = excludeSmallest; i < static_cast<int>(sorted.size()); ++i) {
    const double x = std::log(static_cast<double>(sorted[i].nQubits));
    const double y = std::log(static_cast<double>(sorted[i].maxRowNonzeros));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (int i = excludeSmallest; i < static_cast<int>(sorted.size()); ++i) {
    const double x = std::log(static_cast<double>(sorted[i].nQubits));
    const double y = std::log(static_cast<double>(sorted[i].maxRowNonzeros));
    fit.residuals.push_back(y - (fit.intercept + fit.slope * x));
  }
  return fit;
}

std::vector<SparsityPoint> sparsityScan(const ModelParams& params, int nQubitsMin, int nQubitsMax,
                                        const EnumerationOptions& opts) {
  if (nQubitsMin < 1 || nQubitsMax < nQubitsMin) throw Error("sparsityScan: bad qubit range");
  std::vector<SparsityPoint> points;
  for (int nq = nQubitsMin; nq <= nQubitsMax; ++nq) {
    const auto basis = enumerateBasis(params, TruncationSpec::qubitCount(nq), opts);
    const auto parts = assembleHamiltonian(basis);
    const auto report = sparsity(parts.h);
    points.push_back({report.nQubits, report.maxRowNonzeros});
  }
  return points;
}

}  // namespace htsim
