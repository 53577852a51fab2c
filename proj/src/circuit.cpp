#include "htsim/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace htsim {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void requireQubit(int q, int n) {
  if (q < 0 || q >= n) throw QubitOutOfRange("gate qubit index out of range");
}

// Uniformly controlled rotation, Moettoenen-style recursive demultiplexing.
// angles are indexed by the control pattern with controls[0] as MSB. Gate
// emission is in application order: UCR(sums), CNOT, UCR(diffs), CNOT.
void emitUcr(GateKind axis, std::vector<double> angles, const std::vector<int>& controls,
             int target, std::vector<Gate>& out) {
  if (controls.empty()) {
    if (angles[0] != 0.0) out.push_back({axis, target, -1, angles[0]});
    return;
  }
  const std::size_t half = angles.size() / 2;
  std::vector<double> sums(half), diffs(half);
  for (std::size_t i = 0; i < half; ++i) {
    sums[i] = 0.5 * (angles[i] + angles[i + half]);
    diffs[i] = 0.5 * (angles[i] - angles[i + half]);
  }
  const std::vector<int> rest(controls.begin() + 1, controls.end());
  const std::size_t before = out.size();
  emitUcr(axis, std::move(sums), rest, target, out);
  out.push_back({GateKind::CNOT, controls[0], target, 0.0});
  const std::size_t mid = out.size();
  emitUcr(axis, std::move(diffs), rest, target, out);
  if (out.size() == mid) {
    // Empty inner block: the two CNOTs cancel.
    out.pop_back();
    if (out.size() == before) return;
    return;
  }
  out.push_back({GateKind::CNOT, controls[0], target, 0.0});
}

// Diagonal phase stage diag(e^{i phi_x}) on the listed qubits (highest
// first), up to a recorded global phase.
void emitDiagonalPhases(std::vector<double> phases, std::vector<int> qubits, CircuitIR& circuit) {
  while (!qubits.empty()) {
    const std::size_t half = phases.size() / 2;
    std::vector<double> rz(half), residual(half);
    for (std::size_t p = 0; p < half; ++p) {
      // RZ(l) = diag(e^{-il/2}, e^{+il/2}) on the lowest qubit of the block.
      rz[p] = phases[2 * p + 1] - phases[2 * p];
      residual[p] = 0.5 * (phases[2 * p] + phases[2 * p + 1]);
    }
    const int target = qubits.back();
    qubits.pop_back();
    bool any = false;
    for (double a : rz) any = any || a != 0.0;
    if (any) emitUcr(GateKind::RZ, std::move(rz), qubits, target, circuit.gates);
    phases = std::move(residual);
  }
  circuit.globalPhase += phases[0];
}

void applyGate(const Gate& g, Eigen::VectorXcd& psi, int n) {
  const std::int64_t dim = psi.size();
  requireQubit(g.q0, n);
  if (g.kind == GateKind::CNOT) {
    requireQubit(g.q1, n);
    if (g.q0 == g.q1) throw QubitOutOfRange("CNOT control equals target");
    const std::int64_t cbit = std::int64_t{1} << g.q0;
    const std::int64_t tbit = std::int64_t{1} << g.q1;
    for (std::int64_t x = 0; x < dim; ++x)
      if ((x & cbit) && !(x & tbit)) std::swap(psi[x], psi[x | tbit]);
    return;
  }
  cd u00, u01, u10, u11;
  const double h = g.angle / 2.0;
  switch (g.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      u00 = s; u01 = s; u10 = s; u11 = -s;
      break;
    }
    case GateKind::RX:
      u00 = std::cos(h); u01 = cd(0, -std::sin(h));
      u10 = u01; u11 = u00;
      break;
    case GateKind::RY:
      u00 = std::cos(h); u01 = -std::sin(h);
      u10 = std::sin(h); u11 = u00;
      break;
    case GateKind::RZ:
      u00 = std::exp(cd(0, -h)); u01 = 0;
      u10 = 0; u11 = std::exp(cd(0, h));
      break;
    default:
      throw Error("applyGate: unknown gate");
  }
  const std::int64_t bit = std::int64_t{1} << g.q0;
  for (std::int64_t x = 0; x < dim; ++x) {
    if (x & bit) continue;
    const cd a = psi[x];
    const cd b = psi[x | bit];
    psi[x] = u00 * a + u01 * b;
    psi[x | bit] = u10 * a + u11 * b;
  }
}

const char* gateName(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

CircuitIR emitTrotterStep(const std::vector<PauliTerm>& terms, double dt, int numQubits) {
  if (terms.empty()) throw Error("emitTrotterStep: empty term list");
  CircuitIR circuit;
  circuit.numQubits = numQubits;
  for (const auto& term : terms) {
    if (term.numQubits() != numQubits)
      throw DimensionMismatch("emitTrotterStep: term width != qubit count");
    if (term.coefficient == 0.0) continue;
    if (term.isIdentity()) {
      circuit.globalPhase += -term.coefficient * dt;
      continue;
    }
    std::vector<int> active;
    for (int q = 0; q < numQubits; ++q)
      if (term.letters[q] != 'I') active.push_back(q);

    auto basisChange = [&](bool undo) {
      for (int q : active) {
        switch (term.letters[q]) {
          case 'X':
            circuit.gates.push_back({GateKind::H, q, -1, 0.0});
            break;
          case 'Y':
            // A = H S^dagger maps Y -> Z; S^dagger realized as RZ(-pi/2)
            // (its phase cancels between the change and its undo).
            if (!undo) {
              circuit.gates.push_back({GateKind::RZ, q, -1, -kPi / 2});
              circuit.gates.push_back({GateKind::H, q, -1, 0.0});
            } else {
              circuit.gates.push_back({GateKind::H, q, -1, 0.0});
              circuit.gates.push_back({GateKind::RZ, q, -1, kPi / 2});
            }
            break;
          default:
            break;
        }
      }
    };

    basisChange(false);
    for (std::size_t i = 0; i + 1 < active.size(); ++i)
      circuit.gates.push_back({GateKind::CNOT, active[i], active[i + 1], 0.0});
    circuit.gates.push_back({GateKind::RZ, active.back(), -1, 2.0 * term.coefficient * dt});
    for (std::size_t i = active.size() - 1; i-- > 0;)
      circuit.gates.push_back({GateKind::CNOT, active[i], active[i + 1], 0.0});
    basisChange(true);
  }
  return circuit;
}

CircuitIR prepCircuit(const Eigen::VectorXcd& target, int numQubits) {
  const std::int64_t dim = target.size();
  if (dim == 0 || (dim & (dim - 1)) != 0)
    throw DimensionNotPadded("prepCircuit: target length must be a power of two");
  const int k = std::bit_width(static_cast<std::uint64_t>(dim)) - 1;
  if (k > numQubits) throw DimensionMismatch("prepCircuit: target wider than the register");
  if (std::abs(target.norm() - 1.0) > 1e-6) throw Error("prepCircuit: target is not unit norm");

  CircuitIR circuit;
  circuit.numQubits = numQubits;

  // Magnitude tree: level l holds subtree norms over 2^l prefixes (prefix =
  // most significant bits, i.e. the highest qubits).
  std::vector<std::vector<double>> tree(k + 1);
  tree[k].resize(dim);
  for (std::int64_t x = 0; x < dim; ++x) tree[k][x] = std::abs(target[x]);
  for (int l = k; l-- > 0;) {
    tree[l].resize(std::size_t{1} << l);
    for (std::size_t j = 0; j < tree[l].size(); ++j)
      tree[l][j] = std::hypot(tree[l + 1][2 * j], tree[l + 1][2 * j + 1]);
  }

  for (int l = 0; l < k; ++l) {
    std::vector<double> angles(std::size_t{1} << l);
    for (std::size_t j = 0; j < angles.size(); ++j)
      angles[j] = 2.0 * std::atan2(tree[l + 1][2 * j + 1], tree[l + 1][2 * j]);
    std::vector<int> controls;
    for (int i = 0; i < l; ++i) controls.push_back(k - 1 - i);
    emitUcr(GateKind::RY, std::move(angles), controls, k - 1 - l, circuit.gates);
  }

  bool anyPhase = false;
  std::vector<double> phases(dim, 0.0);
  for (std::int64_t x = 0; x < dim; ++x) {
    if (std::abs(target[x]) > 0.0) phases[x] = std::arg(target[x]);
    anyPhase = anyPhase || phases[x] != 0.0;
  }
  if (anyPhase) {
    std::vector<int> qubits;
    for (int q = k - 1; q >= 0; --q) qubits.push_back(q);
    emitDiagonalPhases(std::move(phases), std::move(qubits), circuit);
  }
  return circuit;
}

Eigen::VectorXcd interpret(const CircuitIR& circuit) {
  if (circuit.numQubits > 14) throw DimensionTooLarge("interpret: more than 14 qubits");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(std::int64_t{1} << circuit.numQubits);
  psi[0] = 1.0;
  return interpret(circuit, std::move(psi));
}

Eigen::VectorXcd interpret(const CircuitIR& circuit, Eigen::VectorXcd state) {
  if (circuit.numQubits > 14) throw DimensionTooLarge("interpret: more than 14 qubits");
  if (state.size() != (std::int64_t{1} << circuit.numQubits))
    throw DimensionMismatch("interpret: state size != 2^numQubits");
  for (const auto& g : circuit.gates) applyGate(g, state, circuit.numQubits);
  if (circuit.globalPhase != 0.0) state *= std::exp(cd(0, circuit.globalPhase));
  return state;
}

GateReport gateReport(const CircuitIR& circuit) {
  GateReport report;
  std::vector<std::int64_t> frontier(circuit.numQubits, 0);
  for (const auto& g : circuit.gates) {
    ++report.totalGates;
    if (g.kind == GateKind::CNOT) {
      ++report.twoQubitGates;
      const std::int64_t layer = std::max(frontier[g.q0], frontier[g.q1]) + 1;
      frontier[g.q0] = layer;
      frontier[g.q1] = layer;
    } else {
      frontier[g.q0] += 1;
    }
  }
  for (std::int64_t f : frontier) report.depth = std::max(report.depth, f);
  return report;
}

StatePrepPermutation reorderForStatePrep(int dim, const std::vector<int>& support) {
  if (support.empty()) throw EmptySupport("reorderForStatePrep: empty support");
  StatePrepPermutation p;
  std::size_t k = 0;
  while ((std::size_t{1} << k) < support.size()) ++k;
  p.compactQubits = static_cast<int>(k);

  std::vector<char> inSupport(dim, 0);
  int maxSupport = 0;
  for (int s : support) {
    if (s < 0 || s >= dim) throw DimensionMismatch("reorderForStatePrep: support index out of range");
    inSupport[s] = 1;
    maxSupport = std::max(maxSupport, s);
  }
  p.forward.resize(dim);
  if (maxSupport < (1 << k)) {
    for (int i = 0; i < dim; ++i) p.forward[i] = i;
  } else {
    int next = 0;
    for (int i = 0; i < dim; ++i)
      if (inSupport[i]) p.forward[i] = next++;
    for (int i = 0; i < dim; ++i)
      if (!inSupport[i]) p.forward[i] = next++;
  }
  p.inverse.resize(dim);
  for (int i = 0; i < dim; ++i) p.inverse[p.forward[i]] = i;
  return p;
}

SymmetricOperator permuteOperator(const SymmetricOperator& op, const StatePrepPermutation& p) {
  std::vector<Eigen::Triplet<double>> upper;
  const auto& m = op.matrix();
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
      const int i = p.forward[it.row()];
      const int j = p.forward[it.col()];
      if (i <= j) upper.emplace_back(i, j, it.value());
    }
  return SymmetricOperator::fromUpperTriplets(op.dim(), upper);
}

Eigen::VectorXcd permuteVector(const Eigen::VectorXcd& v, const StatePrepPermutation& p) {
  Eigen::VectorXcd out(v.size());
  for (int i = 0; i < v.size(); ++i) out[p.forward[i]] = v[i];
  return out;
}

Eigen::VectorXd permuteVector(const Eigen::VectorXd& v, const StatePrepPermutation& p) {
  Eigen::VectorXd out(v.size());
  for (int i = 0; i < v.size(); ++i) out[p.forward[i]] = v[i];
  return out;
}

std::string circuitToText(const CircuitIR& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.numQubits << "\n";
  out << "# phase " << fmt17(circuit.globalPhase) << "\n";
  for (const auto& g : circuit.gates) {
    out << gateName(g.kind) << " " << g.q0;
    if (g.kind == GateKind::CNOT) out << "," << g.q1;
    if (g.kind == GateKind::RX || g.kind == GateKind::RY || g.kind == GateKind::RZ)
      out << "," << fmt17(g.angle);
    out << "\n";
  }
  return out.str();
}

CircuitIR circuitFromText(const std::string& text) {
  std::istringstream in(text);
  CircuitIR circuit;
  std::string line;
  bool sawHeader = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("qubits ", 0) == 0) {
      circuit.numQubits = std::stoi(line.substr(7));
      sawHeader = true;
      continue;
    }
    if (line.rfind("# phase ", 0) == 0) {
      circuit.globalPhase = std::stod(line.substr(8));
      continue;
    }
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, args;
    ls >> name >> args;
    Gate g{};
    if (name == "H") g.kind = GateKind::H;
    else if (name == "RX") g.kind = GateKind::RX;
    else if (name == "RY") g.kind = GateKind::RY;
    else if (name == "RZ") g.kind = GateKind::RZ;
    else if (name == "CNOT") g.kind = GateKind::CNOT;
    else throw IoError("circuitFromText: unknown gate '" + name + "'");
    std::replace(args.begin(), args.end(), ',', ' ');
    std::istringstream as(args);
    as >> g.q0;
    if (g.kind == GateKind::CNOT) {
      if (!(as >> g.q1)) throw IoError("circuitFromText: CNOT needs two qubits");
    } else if (g.kind != GateKind::H) {
      if (!(as >> g.angle)) throw IoError("circuitFromText: rotation needs an angle");
    }
    circuit.gates.push_back(g);
  }
  if (!sawHeader) throw IoError("circuitFromText: missing 'qubits N' header");
  return circuit;
}

}  // namespace htsim
