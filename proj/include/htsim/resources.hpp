#pragma once

#include <cstdint>
#include <vector>

#include "htsim/basis.hpp"

namespace htsim {

/// Lattice baseline: n_q qubits per site, spacing a, volume L, mass m.
struct LatticeSpec {
  int nQubitsPerSite = 2;
  double spacing = 0.0;
  double volume = 0.0;
  double mass = 1.0;
};

struct PrecisionTarget {
  double epsilon = 0.1;
  double sqrtS = 5.0;  // units of m

  void validate() const {
    if (!(epsilon > 0 && epsilon < 1)) throw Error("PrecisionTarget: epsilon must be in (0,1)");
    if (!(sqrtS > 2.0)) throw Error("PrecisionTarget: sqrt(s) must exceed 2m");
  }
};

/// ceil(log2(sector dimension at cutoff eMax)).
int htQubitsVsEmax(const ModelParams& params, double eMax, const EnumerationOptions& opts = {});

/// N_q = n_q * (ML) * (Emax/M), rounded to the nearest integer.
int latticeQubitsVsEmax(int nQubitsPerSite, double dimlessVolume, double dimlessEmax);

/// Hilbert-space truncation error (4!)^2 g^2 / (4 pi Emax^2 m^2), and its
/// inverse for the cutoff.
double htTruncationError(double g, double m, double eMax);
double eMaxForTruncationError(double epsilon, double g, double m);

/// Interparticle potential -18 g^2/m^3 (pi m r)^(-1/2) e^(-2 m r) and its
/// analytic derivative.
double interparticlePotential(double r, double g, double m);
double interparticleForce(double r, double g, double m);  // dV/dr

/// Solves force(r0)/force(1/m) = epsilon by bracketing bisection (the ratio
/// is coupling-independent) and returns L = 6 r0. When the ratio never
/// exceeds epsilon the bracket flag is cleared and L = 6/m.
struct MinVolumeResult {
  double volume = 0.0;
  double separation = 0.0;  // r0
  bool bracketed = true;
};
MinVolumeResult minVolumeForEpsilon(double epsilon, double m);

/// Lattice discretisation error epsilon = 4 (m a)^2, inverted for a.
double latticeSpacingForError(double epsilon, double m);

/// ceil(log2(1 + 4 sqrt(s)/(m pi) (1 + sqrt(L/(a epsilon)))^2)).
int latticeQubitsPerSite(double epsilon, double sqrtS, double volume, double spacing, double m);

/// One row of the fixed-energy precision comparison (2->4 at sqrt(s) = 5m).
struct PrecisionRow {
  double epsilon = 0.0;
  double eMax = 0.0;
  double volume = 0.0;
  double spacing = 0.0;
  int latticeQubitsPerSiteValue = 0;
  std::int64_t latticeSites = 0;
  std::int64_t latticeQubits = 0;
  std::uint64_t htDimension = 0;
  int htQubits = 0;
};

struct PrecisionCompareOptions {
  double g = 1.0;  // = m^2 in units m = 1
  double m = 1.0;
  double sqrtS = 5.0;
  EnumerationOptions enumeration{true, 400'000'000ull};  // even-N sector
};

/// Per epsilon: lattice total qubits versus HT qubits with Emax(eps) and the
/// force-criterion volume. Sector dimensions are counted exactly; a grid
/// point whose count blows the node budget raises BudgetExceeded.
std::vector<PrecisionRow> precisionComparison(const std::vector<double>& epsilonGrid,
                                              const PrecisionCompareOptions& options = {});

/// Least-squares line of ln d versus ln N_q, excluding the five smallest
/// N_q points. Needs at least seven points in total.
struct SparsityPoint {
  int nQubits = 0;
  int maxRowNonzeros = 0;
};
struct SparsityFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;  // fitted points only
  int excluded = 0;
};
SparsityFit fitSparsityScaling(const std::vector<SparsityPoint>& points, int excludeSmallest = 5);

/// Assembles QubitCount bases over [nQubitsMin, nQubitsMax] and measures d.
std::vector<SparsityPoint> sparsityScan(const ModelParams& params, int nQubitsMin, int nQubitsMax,
                                        const EnumerationOptions& opts = {});

}  // namespace htsim
