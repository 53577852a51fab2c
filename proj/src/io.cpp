#include "htsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "htsim/version.hpp"
#include "json.hpp"

namespace htsim {

std::string formatExact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string hexDigest(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void writeFileAtomic(const std::filesystem::path& path, const std::string& contents) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("short write: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string occupationLabel(const FockState& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [mode, occ] : s.entries()) {
    if (!first) out << ";";
    out << mode << ":" << occ;
    first = false;
  }
  return out.str();
}

std::string basisToCsv(const TruncatedBasis& basis) {
  std::ostringstream out;
  out << "index,energy,particle_number,occupations,beta\n";
  for (int i = 0; i < basis.size(); ++i) {
    const auto& pc = basis.state(i);
    out << i << "," << formatExact(basis.energy(i)) << "," << basis.particleNumber(i) << ",\""
        << occupationLabel(pc.representative) << "\"," << formatExact(pc.beta()) << "\n";
  }
  return out.str();
}

std::string operatorToCoordinateText(const SymmetricOperator& op) {
  const auto& m = op.matrix();
  std::ostringstream out;
  out << op.dim() << " " << m.nonZeros() << "\n";
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it)
      out << it.row() << " " << it.col() << " " << formatExact(it.value()) << "\n";
  return out.str();
}

SymmetricOperator operatorFromCoordinateText(const std::string& text) {
  std::istringstream in(text);
  int dim = 0;
  std::int64_t nnz = 0;
  if (!(in >> dim >> nnz)) throw IoError("coordinate text: bad header");
  std::vector<Eigen::Triplet<double>> upper;
  upper.reserve(static_cast<std::size_t>(nnz));
  for (std::int64_t k = 0; k < nnz; ++k) {
    int i = 0, j = 0;
    double v = 0;
    if (!(in >> i >> j >> v)) throw IoError("coordinate text: truncated entries");
    if (i <= j) upper.emplace_back(i, j, v);
  }
  return SymmetricOperator::fromUpperTriplets(dim, upper);
}

std::string stateToCsv(const StateVector& psi) {
  std::ostringstream out;
  out << "index,re,im,label\n";
  for (int i = 0; i < psi.dim(); ++i) {
    out << i << "," << formatExact(psi.amplitudes[i].real()) << ","
        << formatExact(psi.amplitudes[i].imag()) << ",\"";
    if (psi.basis != nullptr) out << occupationLabel(psi.basis->state(i).representative);
    out << "\"\n";
  }
  return out.str();
}

void appendDensityRows(std::string& csv, double t, const SeparationDensity& density) {
  std::ostringstream out;
  for (Eigen::Index j = 0; j < density.gridY.size(); ++j)
    out << formatExact(t) << "," << formatExact(density.gridY[j]) << ","
        << formatExact(density.values[j]) << "\n";
  csv += out.str();
}

void appendHistogramRows(std::string& csv, double t, const OccupationHistogram& hist) {
  std::ostringstream out;
  for (const auto& [n, p] : hist)
    out << formatExact(t) << "," << n << "," << formatExact(p) << "\n";
  csv += out.str();
}

void writeManifest(const std::filesystem::path& directory, const Manifest& manifest) {
  nlohmann::ordered_json j;
  j["configHash"] = manifest.configHash;
  j["basisDimension"] = manifest.basisDimension;
  j["qubitCount"] = manifest.qubitCount;
  j["wallClockSeconds"] = manifest.wallClockSeconds;
  j["libraryVersion"] = std::string(kVersion);
  nlohmann::ordered_json files = nlohmann::ordered_json::object();
  for (const auto& [name, digest] : manifest.files) files[name] = digest;
  j["files"] = files;
  for (const auto& [key, value] : manifest.extra) j[key] = value;
  writeFileAtomic(directory / "manifest.json", j.dump(2) + "\n");
}

void emitArtifact(const std::filesystem::path& directory, const std::string& name,
                  const std::string& contents, Manifest& manifest) {
  std::filesystem::create_directories(directory);
  writeFileAtomic(directory / name, contents);
  manifest.files.emplace_back(name, hexDigest(fnv1a64(contents.data(), contents.size())));
}

}  // namespace htsim
