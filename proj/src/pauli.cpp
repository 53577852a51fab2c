#include "htsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>

namespace htsim {
namespace {

using cd = std::complex<double>;

bool isPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Recursion over the highest remaining qubit. Carries a real block and the
// number of Y letters picked so far; a Y branch contributes a factor i, and
// only even-Y leaves survive for symmetric input (i^y = +-1 there).
void decomposeBlock(const Eigen::MatrixXd& block, int qubits, std::string& letters, int yCount,
                    double dropThreshold, std::vector<PauliTerm>& out) {
  if (qubits == 0) {
    if (yCount % 2 != 0) return;  // exactly zero for symmetric input
    double c = block(0, 0);
    if (yCount % 4 == 2) c = -c;  // i^y with y even
    if (std::abs(c) > dropThreshold && c != 0.0) out.push_back({c, letters});
    return;
  }
  const int half = static_cast<int>(block.rows()) / 2;
  const auto a = block.topLeftCorner(half, half);
  const auto b = block.topRightCorner(half, half);
  const auto c = block.bottomLeftCorner(half, half);
  const auto d = block.bottomRightCorner(half, half);
  const int q = qubits - 1;
  letters[q] = 'I';
  decomposeBlock(0.5 * (a + d), q, letters, yCount, dropThreshold, out);
  letters[q] = 'Z';
  decomposeBlock(0.5 * (a - d), q, letters, yCount, dropThreshold, out);
  letters[q] = 'X';
  decomposeBlock(0.5 * (b + c), q, letters, yCount, dropThreshold, out);
  letters[q] = 'Y';
  decomposeBlock(0.5 * (b - c), q, letters, yCount + 1, dropThreshold, out);
  letters[q] = 'I';
}

}  // namespace

SymmetricOperator padToQubits(const SymmetricOperator& op, double penalty) {
  const int dim = op.dim();
  if (isPowerOfTwo(dim)) return op;
  const int padded = static_cast<int>(std::bit_ceil(static_cast<unsigned>(dim)));
  if (penalty <= 0.0) {
    double maxDiag = 0.0;
    for (int i = 0; i < dim; ++i) maxDiag = std::max(maxDiag, std::abs(op.matrix().coeff(i, i)));
    penalty = 2.0 * maxDiag + 1.0;
  }
  std::vector<Eigen::Triplet<double>> upper;
  const auto& m = op.matrix();
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it)
      if (it.row() <= it.col()) upper.emplace_back(it.row(), it.col(), it.value());
  for (int i = dim; i < padded; ++i) upper.emplace_back(i, i, penalty);
  return SymmetricOperator::fromUpperTriplets(padded, upper);
}

std::vector<PauliTerm> pauliDecompose(const Eigen::MatrixXd& h, double dropThreshold) {
  const int dim = static_cast<int>(h.rows());
  if (h.rows() != h.cols() || !isPowerOfTwo(dim))
    throw DimensionNotPadded("pauliDecompose needs a square 2^n-dimensional operator");
  const int n = std::bit_width(static_cast<unsigned>(dim)) - 1;
  if (n > 12) throw DimensionTooLarge("pauliDecompose: more than 12 qubits");
  std::vector<PauliTerm> out;
  std::string letters(n, 'I');
  decomposeBlock(h, n, letters, 0, dropThreshold, out);
  std::sort(out.begin(), out.end(),
            [](const PauliTerm& x, const PauliTerm& y) { return x.letters < y.letters; });
  return out;
}

std::vector<PauliTerm> pauliDecompose(const SymmetricOperator& op, double dropThreshold) {
  return pauliDecompose(op.dense(), dropThreshold);
}

double droppedWeight(const Eigen::MatrixXd& h, const std::vector<PauliTerm>& kept) {
  auto all = pauliDecompose(h, 0.0);
  double keptSum = 0.0, allSum = 0.0;
  for (const auto& t : kept) keptSum += std::abs(t.coefficient);
  for (const auto& t : all) allSum += std::abs(t.coefficient);
  return allSum - keptSum;
}

Eigen::VectorXcd applyPauliString(const std::string& letters, const Eigen::VectorXcd& psi) {
  const int n = static_cast<int>(letters.size());
  const std::int64_t dim = std::int64_t{1} << n;
  if (psi.size() != dim) throw DimensionMismatch("applyPauliString: state size != 2^n");
  std::uint64_t flipMask = 0, yMask = 0, zMask = 0;
  for (int q = 0; q < n; ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': flipMask |= 1ull << q; break;
      case 'Y': flipMask |= 1ull << q; yMask |= 1ull << q; break;
      case 'Z': zMask |= 1ull << q; break;
      default: throw Error("applyPauliString: bad letter");
    }
  }
  const int yCount = std::popcount(yMask);
  static constexpr cd iPow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
  const cd base = iPow[yCount % 4];
  const std::uint64_t signMask = yMask | zMask;  // disjoint masks
  Eigen::VectorXcd out(dim);
  for (std::int64_t x = 0; x < dim; ++x) {
    const bool minus = std::popcount(static_cast<std::uint64_t>(x) & signMask) & 1;
    out[static_cast<std::int64_t>(x ^ static_cast<std::int64_t>(flipMask))] =
        (minus ? -base : base) * psi[x];
  }
  return out;
}

Eigen::VectorXcd applyPauliExponential(const std::string& letters, double theta,
                                       const Eigen::VectorXcd& psi) {
  return std::cos(theta) * psi - cd(0, 1) * std::sin(theta) * applyPauliString(letters, psi);
}

Eigen::MatrixXcd pauliMatrix(const std::string& letters) {
  const int n = static_cast<int>(letters.size());
  if (n > 12) throw DimensionTooLarge("pauliMatrix: more than 12 qubits");
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd m(dim, dim);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
  for (std::int64_t j = 0; j < dim; ++j) {
    basis[j] = 1.0;
    m.col(j) = applyPauliString(letters, basis);
    basis[j] = 0.0;
  }
  return m;
}

}  // namespace htsim
