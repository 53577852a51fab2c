#include "htsim/assemble.hpp"

#include <unordered_map>

namespace htsim {

HamiltonianParts assembleHamiltonian(const TruncatedBasis& basis) {
  const int dim = basis.size();
  if (dim == 0) throw Error("assembleHamiltonian: empty basis");
  const auto& params = basis.params();
  const auto window = InteractionWindow::forBasis(basis);

  HamiltonianParts parts;
  parts.h0.resize(dim);
  for (int i = 0; i < dim; ++i) parts.h0[i] = basis.energy(i);

  // Each unordered pair is computed exactly once, from the column of its
  // larger index, and mirrored by the operator constructor.
  std::vector<Eigen::Triplet<double>> vUpper;
  std::unordered_map<FockState, double, FockStateHash> orbitSum;
  for (int j = 0; j < dim; ++j) {
    const ParityClass& ket = basis.state(j);
    const auto images = applyInteraction(ket.representative, params, window);
    orbitSum.clear();
    // Fold raw images onto parity orbits; images come canonically sorted, so
    // the accumulation order is deterministic.
    for (const auto& term : images) orbitSum[canonicalRepresentative(term.state)] += term.amplitude;
    for (const auto& [rep, acc] : orbitSum) {
      const auto idx = basis.indexOf(rep);
      if (!idx || *idx > j) continue;
      const ParityClass& bra = basis.state(*idx);
      // For a self-conjugate bra the orbit sum counts its single member once,
      // while c_r + c_Pr counts it twice.
      const double folded = bra.selfConjugate ? foldParityElement(bra.beta(), ket.beta(), acc, acc)
                                              : foldParityElement(bra.beta(), ket.beta(), acc, 0.0);
      if (folded != 0.0) vUpper.emplace_back(*idx, j, folded);
    }
  }
  parts.v = SymmetricOperator::fromUpperTriplets(dim, vUpper);

  std::vector<Eigen::Triplet<double>> hUpper = vUpper;
  // V is normal ordered, so its diagonal entries live in vUpper already;
  // merge E_i into them to keep each unordered pair unique.
  {
    std::vector<double> diag(dim, 0.0);
    std::vector<char> hasDiag(dim, 0);
    std::vector<Eigen::Triplet<double>> merged;
    merged.reserve(hUpper.size() + dim);
    for (const auto& t : hUpper) {
      if (t.row() == t.col()) {
        diag[t.row()] = t.value();
        hasDiag[t.row()] = 1;
      } else {
        merged.push_back(t);
      }
    }
    for (int i = 0; i < dim; ++i) {
      const double d = (hasDiag[i] ? diag[i] : 0.0) + parts.h0[i];
      if (d != 0.0) merged.emplace_back(i, i, d);
    }
    parts.h = SymmetricOperator::fromUpperTriplets(dim, merged);
  }
  return parts;
}

}  // namespace htsim
