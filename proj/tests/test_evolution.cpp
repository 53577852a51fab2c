#include <cmath>
#include <complex>

#include "doctest.h"
#include "htsim/assemble.hpp"
#include "htsim/evolution.hpp"
#include "htsim/observables.hpp"
#include "htsim/wavepacket.hpp"
#include "test_util.hpp"

using namespace htsim;
using testutil::close;

namespace {

const ModelParams kDefault{1.0, 16.0, 1.0};

double energyExpectation(const SymmetricOperator& h, const StateVector& psi) {
  return (psi.amplitudes.dot(h.apply(psi.amplitudes))).real();
}

struct Workspace {
  TruncatedBasis basis;
  HamiltonianParts parts;
  StateVector packet;
};

Workspace makeWorkspace(int nQubits, double g, double p0 = 2.5, double delta = 0.75) {
  ModelParams params = kDefault;
  params.coupling = g;
  auto basis = enumerateBasis(params, TruncationSpec::qubitCount(nQubits), {true});
  auto parts = assembleHamiltonian(basis);
  Workspace ws{std::move(basis), std::move(parts), {}};
  ws.packet = twoPacketState(ws.basis, {p0, delta});
  return ws;
}

}  // namespace

TEST_SUITE("evolution") {
  TEST_CASE("free theory: eigenstates pick up a pure phase") {
    auto ws = makeWorkspace(6, 0.0);
    auto table = pairIndexTable(ws.basis);
    const int m = 2;
    StateVector pair;
    pair.basis = &ws.basis;
    pair.amplitudes = Eigen::VectorXcd::Zero(ws.basis.size());
    pair.amplitudes[table.at(m)] = 1.0;

    const double t = 1.7;
    const auto evolved = exactEvolve(ws.parts.h, pair, t);
    const double phase = -2.0 * modeEnergy(m, kDefault) * t;
    const std::complex<double> expected = std::exp(std::complex<double>(0, phase));
    CHECK(close(std::abs(evolved.amplitudes[table.at(m)] - expected), 0.0, 1e-10));
    CHECK(close(evolved.norm(), 1.0, 1e-12));

    const auto still = exactEvolve(ws.parts.h, pair, 0.0);
    CHECK(close(std::abs(still.amplitudes[table.at(m)] - 1.0), 0.0, 1e-12));
  }

  TEST_CASE("exact evolution conserves energy and norm") {
    auto ws = makeWorkspace(6, 1.0);
    const double before = energyExpectation(ws.parts.h, ws.packet);
    for (double t : {0.5, 2.0, 7.3}) {
      const auto evolved = exactEvolve(ws.parts.h, ws.packet, t);
      CHECK(close(evolved.norm(), 1.0, 1e-10));
      CHECK(close(energyExpectation(ws.parts.h, evolved), before, 1e-10));
    }
  }

  TEST_CASE("product formula is exact when the interaction vanishes") {
    auto ws = makeWorkspace(6, 0.0);
    const auto exact = exactEvolve(ws.parts.h, ws.packet, 1.0);
    for (auto split : {SplitForm::Strang, SplitForm::LieFirstOrder}) {
      TrotterOptions options;
      options.split = split;
      const auto trotter =
          trotterEvolve(ws.parts.h0, ws.parts.v, 1.0, ws.packet, 1.0, 0.01, options);
      CHECK((trotter.state.amplitudes - exact.amplitudes).norm() < 1e-12);
    }
  }

  TEST_CASE("step rounding records the actual time") {
    auto ws = makeWorkspace(4, 1.0);
    const auto r = trotterEvolve(ws.parts.h0, ws.parts.v, 1.0, ws.packet, 0.104, 0.01);
    CHECK(r.steps == 10);  // 0.104/0.01 rounds to 10 whole steps
    CHECK(close(r.actualTime, 0.10, 1e-15));
  }

  TEST_CASE("default split halves the error fourfold when dt halves") {
    auto ws = makeWorkspace(6, 1.0);
    const double t = 1.0;
    const auto exact = exactEvolve(ws.parts.h, ws.packet, t);
    auto errorAt = [&](double dt, SplitForm split) {
      TrotterOptions options;
      options.split = split;
      const auto r = trotterEvolve(ws.parts.h0, ws.parts.v, 1.0, ws.packet, t, dt, options);
      CHECK(close(r.state.norm(), 1.0, 1e-10));
      return (r.state.amplitudes - exact.amplitudes).norm();
    };
    const double ratio = errorAt(0.02, SplitForm::Strang) / errorAt(0.01, SplitForm::Strang);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);

    // Measured convergence orders over dt in {0.04, 0.02, 0.01, 0.005}: the
    // symmetric split must be second order; the plain two-factor product is
    // recorded, accepted anywhere in [0.9, 2.1].
    auto fitOrder = [&](SplitForm split) {
      const std::vector<double> dts = {0.04, 0.02, 0.01, 0.005};
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (double dt : dts) {
        const double x = std::log(dt);
        const double y = std::log(errorAt(dt, split));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
      }
      const double n = dts.size();
      return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double strangOrder = fitOrder(SplitForm::Strang);
    CHECK(strangOrder >= 1.9);
    const double lieOrder = fitOrder(SplitForm::LieFirstOrder);
    MESSAGE("measured convergence orders: symmetric split ", strangOrder,
            ", plain two-factor split ", lieOrder);
    CHECK(lieOrder >= 0.9);
    CHECK(lieOrder <= 2.1);
  }

  TEST_CASE("pauli-product V factor stays close to the exact factor") {
    auto ws = makeWorkspace(4, 1.0);
    const auto terms = pauliDecompose(ws.parts.v);
    TrotterOptions pauliPath;
    pauliPath.vStyle = VFactorStyle::PauliProduct;
    pauliPath.vTerms = &terms;
    const auto viaPauli = trotterEvolve(ws.parts.h0, ws.parts.v, 1.0, ws.packet, 1.0, 0.01, pauliPath);
    const auto viaEigen = trotterEvolve(ws.parts.h0, ws.parts.v, 1.0, ws.packet, 1.0, 0.01, {});
    CHECK(close(viaPauli.state.norm(), 1.0, 1e-10));
    // The two styles differ by the intra-V splitting error only.
    CHECK((viaPauli.state.amplitudes - viaEigen.state.amplitudes).norm() < 5e-3);
  }

  TEST_CASE("adiabatic preparation: identity at g = 0") {
    auto ws = makeWorkspace(6, 0.0);
    const RampSchedule ramp{1.0, 100};
    for (auto method : {RampMethod::TrotterSplit, RampMethod::ExactFactors}) {
      const auto prepared =
          adiabaticPrepare(ws.parts.h0, ws.parts.v, ws.parts.h, ws.packet, ramp, 0.01, method);
      CHECK((prepared.amplitudes - ws.packet.amplitudes).norm() < 1e-10);
    }
  }

  TEST_CASE("ramp down inverts the preparation") {
    auto ws = makeWorkspace(6, 1.0);
    const RampSchedule ramp{1.0, 100};
    for (auto method : {RampMethod::TrotterSplit, RampMethod::ExactFactors}) {
      const auto up =
          adiabaticPrepare(ws.parts.h0, ws.parts.v, ws.parts.h, ws.packet, ramp, 0.01, method);
      CHECK(close(up.norm(), 1.0, 1e-10));
      const auto down = rampDown(ws.parts.h0, ws.parts.v, ws.parts.h, up, ramp, 0.01, method);
      CHECK(fidelity(down, ws.packet) >= 1.0 - 1e-10);
    }
  }

  TEST_CASE("interacting preparation populates four-particle states") {
    auto ws = makeWorkspace(8, 1.0);
    const auto before = occupationHistogram(ws.packet);
    CHECK(before.at(2) == doctest::Approx(1.0));
    const RampSchedule ramp{1.0, 100};
    const auto prepared =
        adiabaticPrepare(ws.parts.h0, ws.parts.v, ws.parts.h, ws.packet, ramp, 0.01);
    const auto after = occupationHistogram(prepared);
    CHECK(after.at(4) > 1e-4);
    CHECK(close(prepared.norm(), 1.0, 1e-10));
  }

  TEST_CASE("dimension mismatches are rejected") {
    auto ws = makeWorkspace(4, 1.0);
    auto other = makeWorkspace(5, 1.0);
    CHECK_THROWS_AS(exactEvolve(ws.parts.h, other.packet, 1.0), DimensionMismatch);
    CHECK_THROWS_AS(trotterEvolve(ws.parts.h0, ws.parts.v, 1.0, other.packet, 1.0, 0.01),
                    DimensionMismatch);
    CHECK_THROWS_AS(exactEvolve(ws.parts.h, ws.packet, 1.0, /*eigDimCeiling=*/4),
                    DimensionTooLarge);
  }
}
