#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "htsim/operator.hpp"

namespace htsim {

/// One term of a Pauli-string expansion. letters[q] in {I,X,Y,Z} acts on
/// qubit q, where qubit q is bit q of the basis-state index (LSB = qubit 0).
/// Real symmetric operators only produce strings with an even number of Y
/// letters, so coefficients are real.
struct PauliTerm {
  double coefficient = 0.0;
  std::string letters;  // length = qubit count

  int numQubits() const { return static_cast<int>(letters.size()); }
  bool isIdentity() const { return letters.find_first_not_of('I') == std::string::npos; }
};

/// Pads a dim x dim operator to 2^ceil(log2(dim)) with decoupled diagonal
/// penalty entries. penalty <= 0 picks 2*max|diag| + 1.
SymmetricOperator padToQubits(const SymmetricOperator& op, double penalty = 0.0);

/// c_P = tr(P H) / 2^n via blockwise tensor recursion, O(n 4^n) time.
/// Requires dim = 2^n (throws DimensionNotPadded otherwise). Terms with
/// |c| <= dropThreshold are omitted; output is sorted by letter string.
std::vector<PauliTerm> pauliDecompose(const SymmetricOperator& op, double dropThreshold = 0.0);
std::vector<PauliTerm> pauliDecompose(const Eigen::MatrixXd& h, double dropThreshold = 0.0);

/// Sum over omitted |c_P|, an operator-norm bound on the truncation made by a
/// nonzero dropThreshold.
double droppedWeight(const Eigen::MatrixXd& h, const std::vector<PauliTerm>& kept);

/// P|psi> for a single string; O(2^n).
Eigen::VectorXcd applyPauliString(const std::string& letters, const Eigen::VectorXcd& psi);

/// exp(-i theta P)|psi> = cos(theta)|psi> - i sin(theta) P|psi>.
Eigen::VectorXcd applyPauliExponential(const std::string& letters, double theta,
                                       const Eigen::VectorXcd& psi);

/// Dense matrix of a string (test/verification sizes only).
Eigen::MatrixXcd pauliMatrix(const std::string& letters);

}  // namespace htsim
