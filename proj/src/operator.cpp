#include "htsim/operator.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>

namespace htsim {

SymmetricOperator SymmetricOperator::fromUpperTriplets(
    int dim, const std::vector<Eigen::Triplet<double>>& upperTriplets) {
  std::vector<Eigen::Triplet<double>> full;
  full.reserve(2 * upperTriplets.size());
  for (const auto& t : upperTriplets) {
    if (t.value() == 0.0) continue;
    if (t.row() > t.col()) throw SymmetryViolation("fromUpperTriplets: entry below the diagonal");
    full.emplace_back(t.row(), t.col(), t.value());
    if (t.row() != t.col()) full.emplace_back(t.col(), t.row(), t.value());
  }
  SymmetricOperator op;
  op.mat_.resize(dim, dim);
  op.mat_.setFromTriplets(full.begin(), full.end());
  op.mat_.makeCompressed();

  // setFromTriplets sums duplicates; a duplicate unordered pair would break
  // the compute-once contract, so verify entrywise symmetry exactly.
  Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(op.mat_.transpose()) - op.mat_;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, k); it; ++it)
      if (it.value() != 0.0)
        throw SymmetryViolation("assembled operator is not exactly symmetric");
  op.certified_ = true;
  return op;
}

const EigenDecomposition& SymmetricOperator::eigendecomposition(int dimCeiling) const {
  if (!eig_) {
    if (dim() > dimCeiling)
      throw DimensionTooLarge("dense eigendecomposition requested above the documented ceiling");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense());
    if (solver.info() != Eigen::Success)
      throw Error("eigendecomposition failed to converge");
    auto e = std::make_shared<EigenDecomposition>();
    e->values = solver.eigenvalues();
    e->vectors = solver.eigenvectors();
    eig_ = std::move(e);
  }
  return *eig_;
}

SparsityReport sparsity(const SymmetricOperator& op) {
  SparsityReport report;
  const auto& m = op.matrix();
  const int dim = op.dim();
  std::vector<int> rowCounts(dim, 0);
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) ++rowCounts[it.row()];
  for (int c : rowCounts) report.maxRowNonzeros = std::max(report.maxRowNonzeros, c);
  report.totalNonzeros = m.nonZeros();
  report.nQubits = dim <= 1 ? 0 : std::bit_width(static_cast<unsigned>(dim - 1));
  return report;
}

}  // namespace htsim
