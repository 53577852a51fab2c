#pragma once

#include "htsim/operator.hpp"
#include "htsim/pauli.hpp"
#include "htsim/state_vector.hpp"

namespace htsim {

/// Product-formula arrangement of one step. Strang (the default) symmetrizes
/// the free factor, which removes the boundary O(dt) term and makes the
/// global error second order; LieFirstOrder is the plain two-factor product.
enum class SplitForm { Strang, LieFirstOrder };

/// How e^{-i lambda V dt} is realized: exact via V's cached eigendecomposition,
/// or the ordered Pauli-term product that mirrors the emitted circuits.
enum class VFactorStyle { EigenExact, PauliProduct };

struct TrotterOptions {
  SplitForm split = SplitForm::Strang;
  VFactorStyle vStyle = VFactorStyle::EigenExact;
  // Required for PauliProduct: V's terms at unit coupling, in circuit order.
  const std::vector<PauliTerm>* vTerms = nullptr;
  int eigDimCeiling = 1 << 14;
};

/// psi(t) = sum_k e^{-i E_k t} |v_k><v_k|psi> from a one-time dense
/// eigendecomposition cached on h.
StateVector exactEvolve(const SymmetricOperator& h, const StateVector& psi, double t,
                        int eigDimCeiling = 1 << 14);

struct TrotterResult {
  StateVector state;
  double actualTime = 0.0;  // steps * dt, t rounded to a whole step count
  int steps = 0;
};

/// Product-formula evolution under H0 + couplingScale * V. The H0 factor is
/// exact diagonal phases; no per-step renormalization (unitarity is
/// structural).
TrotterResult trotterEvolve(const Eigen::VectorXd& h0, const SymmetricOperator& v,
                            double couplingScale, const StateVector& psi, double t, double dt,
                            const TrotterOptions& options = {});

/// Linear adiabatic ramp: N+1 factors a = 0..N with coupling 1 - a/N, each of
/// duration deltaTau = tau/N, the weakest coupling acting first.
struct RampSchedule {
  double tau = 1.0;
  int steps = 100;  // N

  double deltaTau() const { return tau / steps; }
  double lambda(int a) const { return 1.0 - static_cast<double>(a) / steps; }
  /// (N+1) * deltaTau: the ramp product as written has N+1 factors.
  double totalDuration() const { return (steps + 1) * deltaTau(); }

  void validate() const {
    if (!(tau > 0)) throw Error("RampSchedule: tau must be positive");
    if (steps < 1) throw Error("RampSchedule: steps must be >= 1");
  }
};

enum class RampMethod { ExactFactors, TrotterSplit };

/// Adiabatic state preparation: the ramp product (coupling 0 -> 1), then
/// backward evolution under the full H for the ramp duration, undoing the
/// displacement accumulated while ramping. Factors are exact instantaneous
/// exponentials (ExactFactors) or Strang sub-steps of size <= dt.
StateVector adiabaticPrepare(const Eigen::VectorXd& h0, const SymmetricOperator& v,
                             const SymmetricOperator& hFull, const StateVector& psiFree,
                             const RampSchedule& ramp, double dt,
                             RampMethod method = RampMethod::TrotterSplit);

/// Exact inverse of adiabaticPrepare (conjugate factors in reverse order).
StateVector rampDown(const Eigen::VectorXd& h0, const SymmetricOperator& v,
                     const SymmetricOperator& hFull, const StateVector& psiInteracting,
                     const RampSchedule& ramp, double dt,
                     RampMethod method = RampMethod::TrotterSplit);

/// e^{-i t diag(h0)} applied in place.
void applyDiagonalPhases(const Eigen::VectorXd& h0, double t, Eigen::VectorXcd& amplitudes);

}  // namespace htsim
