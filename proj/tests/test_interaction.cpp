#include <cmath>

#include "doctest.h"
#include "htsim/assemble.hpp"
#include "htsim/interaction.hpp"
#include "oracle_fock.hpp"
#include "test_util.hpp"

using namespace htsim;
using testutil::close;

namespace {

const ModelParams kDefault{1.0, 16.0, 1.0};

double amplitudeOn(const std::vector<ImageTerm>& images, const FockState& target) {
  for (const auto& term : images)
    if (term.state == target) return term.amplitude;
  return 0.0;
}

}  // namespace

TEST_SUITE("interaction") {
  TEST_CASE("vacuum image contains {0:4} with amplitude g sqrt(24)/(4 L M^2)") {
    const InteractionWindow window{4, 10.0};
    const auto images = applyInteraction(FockState{}, kDefault, window);
    const double expected = std::sqrt(24.0) / 64.0;  // g=1, L=16, M=1
    CHECK(close(amplitudeOn(images, FockState{{0, 4}}), expected, 1e-14));
    // Every monomial with annihilators kills the vacuum: only 4-particle
    // images appear, all with zero momentum.
    for (const auto& term : images) {
      CHECK(term.state.particleNumber() == 4);
      CHECK(term.state.totalMomentum() == 0);
    }
  }

  TEST_CASE("two particles at rest: diagonal and vacuum elements") {
    const InteractionWindow window{4, 10.0};
    const FockState twoAtRest{{0, 2}};
    const auto images = applyInteraction(twoAtRest, kDefault, window);
    CHECK(amplitudeOn(images, FockState{}) == 0.0);  // net +2 needs an annihilator on |0>
    CHECK(close(amplitudeOn(images, twoAtRest), 3.0 / 16.0, 1e-14));
    for (const auto& term : images) {
      CHECK(term.state.totalMomentum() == 0);
      const int dn = term.state.particleNumber() - 2;
      CHECK((dn == 0 || dn == 2 || dn == 4 || dn == -2));
    }
  }

  TEST_CASE("images match the ordered-quadruple oracle term by term") {
    const InteractionWindow window{3, 12.0};
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
      FockState s = testutil::randomFockState(rng, 3, 4);
      if (s.totalMomentum() != 0) continue;  // op precondition
      const auto images = applyInteraction(s, kDefault, window);
      oracle::StateMap ket;
      ket[s] = 1.0;
      auto expected = oracle::applyVRaw(ket, kDefault, window.maxAbsMode);
      for (const auto& term : images) {
        auto it = expected.find(term.state);
        REQUIRE(it != expected.end());
        CHECK(close(term.amplitude, it->second, 1e-13));
      }
      // Oracle images missing from the implementation must only be states the
      // energy cap pruned.
      for (const auto& [state, amp] : expected) {
        if (stateEnergy(state, kDefault) <= window.maxImageEnergy && std::abs(amp) > 1e-15)
          CHECK(close(amplitudeOn(images, state), amp, 1e-13));
      }
    }
  }

  TEST_CASE("parity-projected matrix elements: spec examples") {
    auto basis = enumerateBasis(kDefault, TruncationSpec::energyCutoff(4.0), {true});
    const auto window = InteractionWindow::forBasis(basis);
    const ParityClass vacuum = basis.state(*basis.indexOf(FockState{}));
    CHECK(matrixElementV(vacuum, vacuum, kDefault, window) == 0.0);

    const ParityClass fourAtRest = basis.state(*basis.indexOf(FockState{{0, 4}}));
    const double expected = std::sqrt(24.0) / 64.0;
    CHECK(close(matrixElementV(vacuum, fourAtRest, kDefault, window), expected, 1e-14));
    CHECK(close(matrixElementV(fourAtRest, vacuum, kDefault, window), expected, 1e-14));

    // Single particle at rest: 6 a+a+aa needs two annihilations.
    auto oddBasis = enumerateBasis(kDefault, TruncationSpec::energyCutoff(2.0));
    const ParityClass single = oddBasis.state(*oddBasis.indexOf(FockState{{0, 1}}));
    CHECK(matrixElementV(single, single, kDefault, InteractionWindow::forBasis(oddBasis)) == 0.0);
  }

  TEST_CASE("assembled 3-state Hamiltonian matches the worked example") {
    auto basis = enumerateBasis(kDefault, TruncationSpec::energyCutoff(2.0));
    REQUIRE(basis.size() == 3);
    const auto parts = assembleHamiltonian(basis);
    Eigen::MatrixXd h0 = Eigen::MatrixXd::Zero(3, 3);
    h0.diagonal() << 0.0, 1.0, 2.0;
    CHECK(parts.h0[0] == 0.0);
    CHECK(parts.h0[1] == 1.0);
    CHECK(parts.h0[2] == 2.0);
    const Eigen::MatrixXd v = parts.v.dense();
    CHECK(v(0, 2) == 0.0);  // <vac|V|{0:2}> vanishes
    CHECK(v(2, 0) == 0.0);
    CHECK(close(v(2, 2), 3.0 / 16.0, 1e-14));
    const Eigen::MatrixXd h = parts.h.dense();
    CHECK(h(0, 0) == 0.0);  // normal-ordered vacuum energy
    CHECK(close(h(2, 2), 2.0 + 3.0 / 16.0, 1e-14));
  }

  TEST_CASE("g = 0 assembles to the bare diagonal") {
    ModelParams free = kDefault;
    free.coupling = 0.0;
    auto basis = enumerateBasis(free, TruncationSpec::qubitCount(3));
    const auto parts = assembleHamiltonian(basis);
    CHECK(parts.v.matrix().nonZeros() == 0);
    const Eigen::MatrixXd h = parts.h.dense();
    for (int i = 0; i < basis.size(); ++i)
      for (int j = 0; j < basis.size(); ++j)
        CHECK(h(i, j) == (i == j ? basis.energy(i) : 0.0));
  }

  TEST_CASE("assembly equals matrixElementV and the independent oracle") {
    for (const double g : {0.5, 2.0}) {
      for (const bool evenOnly : {false, true}) {
        const ModelParams params{1.0, 8.0, g};
        auto basis = enumerateBasis(params, TruncationSpec::energyCutoff(6.0), {evenOnly});
        CAPTURE(g);
        CAPTURE(evenOnly);
        REQUIRE(basis.size() >= 8);
        REQUIRE(basis.size() <= 80);
        const auto window = InteractionWindow::forBasis(basis);
        const auto parts = assembleHamiltonian(basis);
        const Eigen::MatrixXd v = parts.v.dense();
        for (int j = 0; j < basis.size(); ++j) {
          for (int i = 0; i <= j; ++i) {
            const double direct = matrixElementV(basis.state(i), basis.state(j), params, window);
            CHECK(v(i, j) == v(j, i));  // bitwise symmetric storage
            CHECK(close(v(i, j), direct, 1e-13));
            const double viaOracle =
                oracle::matrixElement(basis.state(i), basis.state(j), params, window.maxAbsMode);
            CHECK(close(v(i, j), viaOracle, 1e-12));
          }
        }
      }
    }
  }

  TEST_CASE("selection rule: particle number changes only by 0, 2 or 4") {
    auto basis = enumerateBasis(kDefault, TruncationSpec::qubitCount(5));
    const auto parts = assembleHamiltonian(basis);
    const auto& v = parts.v.matrix();
    for (int k = 0; k < v.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(v, k); it; ++it) {
        const int dn = std::abs(basis.particleNumber(it.row()) - basis.particleNumber(it.col()));
        CHECK((dn == 0 || dn == 2 || dn == 4));
      }
  }
}
