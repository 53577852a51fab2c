#include "htsim/evolution.hpp"

#include <cmath>
#include <complex>

namespace htsim {
namespace {

using cd = std::complex<double>;

Eigen::VectorXcd applyEigExp(const EigenDecomposition& eig, double t, const Eigen::VectorXcd& v) {
  // Q e^{-i Lambda t} Q^T v with real Q: two real matvecs per component.
  Eigen::VectorXcd y = eig.vectors.transpose() * v;
  for (Eigen::Index k = 0; k < y.size(); ++k) y[k] *= std::exp(cd(0, -eig.values[k] * t));
  return eig.vectors * y;
}

void applyVFactor(const SymmetricOperator& v, double lambdaT, const TrotterOptions& options,
                  Eigen::VectorXcd& psi) {
  if (lambdaT == 0.0) return;
  if (options.vStyle == VFactorStyle::EigenExact) {
    psi = applyEigExp(v.eigendecomposition(options.eigDimCeiling), lambdaT, psi);
    return;
  }
  if (options.vTerms == nullptr)
    throw Error("trotterEvolve: PauliProduct style needs vTerms");
  for (const auto& term : *options.vTerms)
    psi = applyPauliExponential(term.letters, term.coefficient * lambdaT, psi);
}

// One product-formula step for H0 + lambda*V over duration dt.
void splitStep(const Eigen::VectorXd& h0, const SymmetricOperator& v, double lambda, double dt,
               const TrotterOptions& options, Eigen::VectorXcd& psi) {
  if (options.split == SplitForm::Strang) {
    applyDiagonalPhases(h0, dt / 2, psi);
    applyVFactor(v, lambda * dt, options, psi);
    applyDiagonalPhases(h0, dt / 2, psi);
  } else {
    applyDiagonalPhases(h0, dt, psi);
    applyVFactor(v, lambda * dt, options, psi);
  }
}

// Evolve under H0 + lambda*V for (signed) duration, in sub-steps of size <= dt.
void splitEvolve(const Eigen::VectorXd& h0, const SymmetricOperator& v, double lambda,
                 double duration, double dt, const TrotterOptions& options, Eigen::VectorXcd& psi) {
  if (duration == 0.0) return;
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(duration) / dt - 1e-12)));
  const double h = duration / n;
  for (int i = 0; i < n; ++i) splitStep(h0, v, lambda, h, options, psi);
}

void requireMatchingDims(const Eigen::VectorXd& h0, const SymmetricOperator& v,
                         const StateVector& psi) {
  if (h0.size() != psi.dim() || v.dim() != psi.dim())
    throw DimensionMismatch("operator and state dimensions differ");
}

}  // namespace

void applyDiagonalPhases(const Eigen::VectorXd& h0, double t, Eigen::VectorXcd& amplitudes) {
  if (h0.size() != amplitudes.size())
    throw DimensionMismatch("applyDiagonalPhases: dimension mismatch");
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i)
    amplitudes[i] *= std::exp(cd(0, -h0[i] * t));
}

StateVector exactEvolve(const SymmetricOperator& h, const StateVector& psi, double t,
                        int eigDimCeiling) {
  if (h.dim() != psi.dim()) throw DimensionMismatch("exactEvolve: dimension mismatch");
  StateVector out = psi;
  out.amplitudes = applyEigExp(h.eigendecomposition(eigDimCeiling), t, psi.amplitudes);
  return out;
}

TrotterResult trotterEvolve(const Eigen::VectorXd& h0, const SymmetricOperator& v,
                            double couplingScale, const StateVector& psi, double t, double dt,
                            const TrotterOptions& options) {
  requireMatchingDims(h0, v, psi);
  if (!(dt > 0)) throw Error("trotterEvolve: dt must be positive");
  const int steps = static_cast<int>(std::llround(t / dt));
  TrotterResult result;
  result.state = psi;
  result.steps = steps;
  result.actualTime = steps * dt;
  const double h = t < 0 ? -dt : dt;
  for (int i = 0; i < std::abs(steps); ++i)
    splitStep(h0, v, couplingScale, h, options, result.state.amplitudes);
  return result;
}

StateVector adiabaticPrepare(const Eigen::VectorXd& h0, const SymmetricOperator& v,
                             const SymmetricOperator& hFull, const StateVector& psiFree,
                             const RampSchedule& ramp, double dt, RampMethod method) {
  requireMatchingDims(h0, v, psiFree);
  ramp.validate();
  StateVector out = psiFree;
  const double dtau = ramp.deltaTau();
  TrotterOptions options;  // Strang + exact V factor
  for (int a = ramp.steps; a >= 0; --a) {
    const double lambda = ramp.lambda(a);
    if (method == RampMethod::ExactFactors) {
      // Exact exponential of the instantaneous H0 + lambda*V.
      Eigen::MatrixXd inst = v.dense() * lambda;
      inst.diagonal() += h0;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(inst);
      EigenDecomposition eig{solver.eigenvalues(), solver.eigenvectors()};
      out.amplitudes = applyEigExp(eig, dtau, out.amplitudes);
    } else {
      splitEvolve(h0, v, lambda, dtau, dt, options, out.amplitudes);
    }
  }
  // Backward full-H evolution over the ramp duration restores the packet
  // positions; with zero coupling this cancels the ramp product exactly.
  const double back = -ramp.totalDuration();
  if (method == RampMethod::ExactFactors) {
    out.amplitudes = applyEigExp(hFull.eigendecomposition(), back, out.amplitudes);
  } else {
    splitEvolve(h0, v, 1.0, back, dt, options, out.amplitudes);
  }
  return out;
}

StateVector rampDown(const Eigen::VectorXd& h0, const SymmetricOperator& v,
                     const SymmetricOperator& hFull, const StateVector& psiInteracting,
                     const RampSchedule& ramp, double dt, RampMethod method) {
  requireMatchingDims(h0, v, psiInteracting);
  ramp.validate();
  StateVector out = psiInteracting;
  TrotterOptions options;
  const double forward = ramp.totalDuration();
  if (method == RampMethod::ExactFactors) {
    out.amplitudes = applyEigExp(hFull.eigendecomposition(), forward, out.amplitudes);
  } else {
    splitEvolve(h0, v, 1.0, forward, dt, options, out.amplitudes);
  }
  const double dtau = ramp.deltaTau();
  for (int a = 0; a <= ramp.steps; ++a) {
    const double lambda = ramp.lambda(a);
    if (method == RampMethod::ExactFactors) {
      Eigen::MatrixXd inst = v.dense() * lambda;
      inst.diagonal() += h0;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(inst);
      EigenDecomposition eig{solver.eigenvalues(), solver.eigenvectors()};
      out.amplitudes = applyEigExp(eig, -dtau, out.amplitudes);
    } else {
      splitEvolve(h0, v, lambda, -dtau, dt, options, out.amplitudes);
    }
  }
  return out;
}

}  // namespace htsim
