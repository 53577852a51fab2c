#include "htsim/observables.hpp"

#include <cmath>
#include <complex>

#include "htsim/wavepacket.hpp"

namespace htsim {
namespace {

double trapezoid(const Eigen::VectorXd& y, const Eigen::VectorXd& f) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i + 1 < y.size(); ++i)
    sum += 0.5 * (f[i] + f[i + 1]) * (y[i + 1] - y[i]);
  return sum;
}

}  // namespace

double pairWavefunction(int n, double y, const ModelParams& params) {
  const double L = params.circumference;
  if (n == 0) return std::sqrt(2.0 / L);
  const double k = dispersion(n, params).momentum;
  return 2.0 / std::sqrt(L) * std::cos(k * y);
}

double SeparationDensity::integral() const { return trapezoid(gridY, values); }

double SeparationDensity::firstMoment() const {
  Eigen::VectorXd yf = gridY.cwiseProduct(values);
  return trapezoid(gridY, yf);
}

SeparationDensity separationDensity(const StateVector& psi, int gridSize) {
  if (psi.basis == nullptr) throw Error("separationDensity: state has no basis");
  if (gridSize < 2) throw Error("separationDensity: gridSize must be >= 2");
  const auto& basis = *psi.basis;
  const double L = basis.params().circumference;
  const auto pairs = pairIndexTable(basis);

  SeparationDensity density;
  density.gridY.resize(gridSize);
  density.values = Eigen::VectorXd::Zero(gridSize);
  const double step = (L / 2.0) / (gridSize - 1);
  for (int j = 0; j < gridSize; ++j) density.gridY[j] = j * step;

  for (const auto& [m, idx] : pairs)
    density.twoParticleWeight += std::norm(psi.amplitudes[idx]);

  for (int j = 0; j < gridSize; ++j) {
    std::complex<double> s = 0.0;
    for (const auto& [m, idx] : pairs)
      s += psi.amplitudes[idx] * pairWavefunction(m, density.gridY[j], basis.params());
    density.values[j] = std::norm(s);
  }
  return density;
}

OccupationHistogram occupationHistogram(const StateVector& psi) {
  if (psi.basis == nullptr) throw Error("occupationHistogram: state has no basis");
  OccupationHistogram hist;
  for (int i = 0; i < psi.dim(); ++i)
    hist[psi.basis->particleNumber(i)] += std::norm(psi.amplitudes[i]);
  return hist;
}

}  // namespace htsim
