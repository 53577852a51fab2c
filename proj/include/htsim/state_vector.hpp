#pragma once

#include <Eigen/Dense>

#include "htsim/basis.hpp"

namespace htsim {

/// Complex amplitude vector over a truncated basis. Non-owning basis pointer:
/// the basis must outlive every state built on it.
struct StateVector {
  const TruncatedBasis* basis = nullptr;
  Eigen::VectorXcd amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }

  void requireSameBasis(const StateVector& other) const {
    if (basis != other.basis || dim() != other.dim())
      throw DimensionMismatch("states live on different bases");
  }
};

inline std::complex<double> overlap(const StateVector& a, const StateVector& b) {
  a.requireSameBasis(b);
  return a.amplitudes.dot(b.amplitudes);  // conjugates a
}

inline double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(overlap(a, b));
}

}  // namespace htsim
