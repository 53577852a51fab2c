#pragma once

#include <Eigen/Dense>

#include "htsim/basis.hpp"
#include "htsim/interaction.hpp"
#include "htsim/operator.hpp"

namespace htsim {

/// H restricted to the truncated basis: diagonal free part, interaction and
/// their sum. V's images outside the basis are dropped (that drop is the
/// truncation itself).
struct HamiltonianParts {
  Eigen::VectorXd h0;     // E_i, ascending
  SymmetricOperator v;    // <i|V|j>
  SymmetricOperator h;    // diag(E) + V
};

HamiltonianParts assembleHamiltonian(const TruncatedBasis& basis);

}  // namespace htsim
