#include "htsim/analysis.hpp"

#include <algorithm>

#include "htsim/errors.hpp"

namespace htsim {

std::optional<double> fringeSpacing(const SeparationDensity& density, double threshold) {
  const auto& v = density.values;
  const auto& y = density.gridY;
  if (v.size() < 3) return std::nullopt;
  const double cut = threshold * v.maxCoeff();
  std::vector<double> peaks;
  const Eigen::Index last = v.size() - 1;
  if (v[0] > cut && v[0] > v[1]) peaks.push_back(y[0]);
  for (Eigen::Index j = 1; j < last; ++j)
    if (v[j] > cut && v[j] > v[j - 1] && v[j] >= v[j + 1]) peaks.push_back(y[j]);
  if (v[last] > cut && v[last] > v[last - 1]) peaks.push_back(y[last]);
  if (peaks.size() < 2) return std::nullopt;
  std::vector<double> gaps;
  for (std::size_t i = 1; i < peaks.size(); ++i) gaps.push_back(peaks[i] - peaks[i - 1]);
  std::sort(gaps.begin(), gaps.end());
  const std::size_t n = gaps.size();
  return n % 2 == 1 ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
}

double collisionTime(const std::vector<TrajectorySample>& samples) {
  if (samples.empty()) throw Error("collisionTime: empty trajectory");
  const auto it = std::min_element(
      samples.begin(), samples.end(),
      [](const TrajectorySample& a, const TrajectorySample& b) { return a.firstMoment < b.firstMoment; });
  return it->t;
}

}  // namespace htsim
