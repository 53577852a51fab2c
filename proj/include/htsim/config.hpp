#pragma once

#include <string>
#include <vector>

#include "htsim/basis.hpp"
#include "htsim/model.hpp"
#include "htsim/wavepacket.hpp"

namespace htsim {

/// End-to-end run description. Defaults reproduce the emulator scattering
/// setup: two packets at p0 = 2.5, delta = 0.75 on an ML = 16 circle,
/// 1.5 time units of free displacement, a tau = 1 ramp and dt = 0.01 steps
/// on a 10-qubit even-sector basis.
struct RunConfig {
  ModelParams model{1.0, 16.0, 1.0};

  struct Truncation {
    std::string mode = "qubits";  // "qubits" | "energy"
    double value = 10.0;
    bool evenParticleNumberOnly = true;
  } truncation;

  WavepacketSpec packet{2.5, 0.75};

  struct Schedule {
    double freeDisplacementTime = 1.5;
    double rampTau = 1.0;
    int rampSteps = 100;
    double dt = 0.01;
    double tMax = 6.0;
    int sampleEvery = 10;  // in dt steps
  } schedule;

  struct Observables {
    int gridSize = 512;
  } observables;

  struct Outputs {
    std::string directory = "out";
    std::vector<std::string> formats{"csv"};
  } outputs;

  struct Resources {
    std::vector<double> eMaxGrid{2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0, 6.5, 7.0};
    std::vector<double> epsilonGrid{0.3, 0.2, 0.15, 0.1, 0.07, 0.05};
    int nQubitsPerSite = 2;
    int sparsityQubitsMin = 4;
    int sparsityQubitsMax = 10;
  } resources;

  struct Circuit {
    bool reorderStatePrep = true;
    double dropThreshold = 0.0;
    // Sub-step for the ramp-factor product formulas; 0 means one sub-step
    // per ramp factor (deltaTau itself).
    double dt = 0.0;
  } circuit;

  TruncationSpec truncationSpec() const;
  EnumerationOptions enumerationOptions() const;

  void validate() const;
};

/// Parses and validates; throws ConfigError carrying a line-precise location
/// for syntax errors and a JSON-pointer path for semantic ones.
RunConfig configFromJsonText(const std::string& text);
std::string configToJsonText(const RunConfig& config);

/// Hash of the canonical JSON rendering, recorded in manifests.
std::string configHash(const RunConfig& config);

}  // namespace htsim
