#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "htsim/operator.hpp"
#include "htsim/pauli.hpp"

namespace htsim {

enum class GateKind { H, RX, RY, RZ, CNOT };

struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;        // CNOT target
  double angle = 0.0;  // rotations only

  bool operator==(const Gate&) const = default;
};

/// Ordered gate list plus an accumulated global phase: the represented
/// unitary is e^{i globalPhase} * (gates applied first-to-last).
struct CircuitIR {
  int numQubits = 0;
  double globalPhase = 0.0;
  std::vector<Gate> gates;

  bool operator==(const CircuitIR&) const = default;
};

struct GateReport {
  std::int64_t totalGates = 0;
  std::int64_t twoQubitGates = 0;
  std::int64_t depth = 0;  // greedy layering on disjoint qubit sets
};

/// One product-formula factor prod_P e^{-i c_P P dt} in the terms' list
/// order. Each non-identity term becomes the standard exponential gadget
/// (basis change, CNOT ladder, RZ(2 c dt), unwind); identity terms only
/// advance the global phase.
CircuitIR emitTrotterStep(const std::vector<PauliTerm>& terms, double dt, int numQubits);

/// Amplitude encoding of a 2^k-entry target on the k lowest qubits of an
/// numQubits-wide register, via uniformly controlled RY rotations plus a
/// diagonal phase stage. Exact up to the recorded global phase.
CircuitIR prepCircuit(const Eigen::VectorXcd& target, int numQubits);

/// Applies the circuit to |0...0> (or a caller state) with exact gate
/// semantics, including the recorded global phase.
Eigen::VectorXcd interpret(const CircuitIR& circuit);
Eigen::VectorXcd interpret(const CircuitIR& circuit, Eigen::VectorXcd state);

GateReport gateReport(const CircuitIR& circuit);

/// Basis permutation that packs a support set into the first 2^k slots,
/// preserving relative order (identity when it already fits).
struct StatePrepPermutation {
  std::vector<int> forward;  // old index -> new index
  std::vector<int> inverse;
  int compactQubits = 0;     // k
};

StatePrepPermutation reorderForStatePrep(int dim, const std::vector<int>& support);
SymmetricOperator permuteOperator(const SymmetricOperator& op, const StatePrepPermutation& p);
Eigen::VectorXcd permuteVector(const Eigen::VectorXcd& v, const StatePrepPermutation& p);
Eigen::VectorXd permuteVector(const Eigen::VectorXd& v, const StatePrepPermutation& p);

/// Text format: "qubits N", "# phase <17 digits>", one gate per line
/// "GATE q[,q2][,angle]". Round-trips bit-exactly.
std::string circuitToText(const CircuitIR& circuit);
CircuitIR circuitFromText(const std::string& text);

}  // namespace htsim
