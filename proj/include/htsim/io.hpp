#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "htsim/basis.hpp"
#include "htsim/observables.hpp"
#include "htsim/operator.hpp"
#include "htsim/state_vector.hpp"

namespace htsim {

/// %.17g, enough digits to round-trip a double exactly.
std::string formatExact(double v);

/// FNV-1a 64 over raw bytes, printed as 16 hex digits.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string hexDigest(std::uint64_t h);

void writeFileAtomic(const std::filesystem::path& path, const std::string& contents);
std::string readFile(const std::filesystem::path& path);

/// "n:r;n:r" rendering of an occupation map ("" for the vacuum).
std::string occupationLabel(const FockState& s);

/// Basis CSV: index, energy, particle_number, occupations, beta.
std::string basisToCsv(const TruncatedBasis& basis);

/// Coordinate text: header "dim nnz", then 0-based "i j value" rows with 17
/// significant digits, in column-major stored order. Bit-exact round trip.
std::string operatorToCoordinateText(const SymmetricOperator& op);
SymmetricOperator operatorFromCoordinateText(const std::string& text);

/// State CSV: index, re, im, basis-state label.
std::string stateToCsv(const StateVector& psi);

/// Heatmap rows (t, y, density) and histogram rows (t, N, probability).
void appendDensityRows(std::string& csv, double t, const SeparationDensity& density);
void appendHistogramRows(std::string& csv, double t, const OccupationHistogram& hist);

/// Run manifest, written atomically at run end.
struct Manifest {
  std::string configHash;
  int basisDimension = 0;
  int qubitCount = 0;
  double wallClockSeconds = 0.0;
  std::vector<std::pair<std::string, std::string>> files;  // name -> checksum
  std::vector<std::pair<std::string, std::string>> extra;  // free-form metadata
};

void writeManifest(const std::filesystem::path& directory, const Manifest& manifest);

/// Writes contents into directory/name and records it in the manifest.
void emitArtifact(const std::filesystem::path& directory, const std::string& name,
                  const std::string& contents, Manifest& manifest);

}  // namespace htsim
