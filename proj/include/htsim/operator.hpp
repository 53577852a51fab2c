#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <memory>
#include <vector>

#include "htsim/errors.hpp"

namespace htsim {

struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns are eigenvectors
};

/// Sparse real symmetric operator on the truncated basis. Entries are stored
/// for both triangles; construction mirrors each unordered pair from a single
/// computed value, so the matrix is bitwise symmetric.
class SymmetricOperator {
 public:
  SymmetricOperator() = default;

  /// upperTriplets must contain each unordered pair (i <= j) at most once;
  /// the lower triangle is mirrored here. Exact zeros are dropped.
  static SymmetricOperator fromUpperTriplets(int dim,
                                             const std::vector<Eigen::Triplet<double>>& upperTriplets);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::SparseMatrix<double>& matrix() const { return mat_; }
  bool symmetryCertified() const { return certified_; }

  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(mat_); }

  /// Dense eigendecomposition, computed once and cached.
  const EigenDecomposition& eigendecomposition(int dimCeiling = 1 << 14) const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return mat_ * v; }

 private:
  Eigen::SparseMatrix<double> mat_;
  bool certified_ = false;
  mutable std::shared_ptr<const EigenDecomposition> eig_;
};

struct SparsityReport {
  int nQubits = 0;             // ceil(log2(dim))
  int maxRowNonzeros = 0;      // d
  std::int64_t totalNonzeros = 0;
};

/// d = max over rows of the stored-nonzero count; exact zeros are never stored.
SparsityReport sparsity(const SymmetricOperator& op);

}  // namespace htsim
