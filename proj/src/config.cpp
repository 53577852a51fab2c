#include "htsim/config.hpp"

#include <cmath>

#include "htsim/io.hpp"
#include "json.hpp"

namespace htsim {
namespace {

using nlohmann::json;

int lineOfOffset(const std::string& text, std::size_t byteOffset) {
  int line = 1;
  for (std::size_t i = 0; i < byteOffset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

double requireNumber(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

int requireInt(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<int>();
}

bool requireBool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path, "expected a boolean");
  return j.get<bool>();
}

std::string requireString(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> requireNumberArray(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(requireNumber(v, path));
  return out;
}

const json* find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

}  // namespace

TruncationSpec RunConfig::truncationSpec() const {
  if (truncation.mode == "qubits")
    return TruncationSpec::qubitCount(static_cast<int>(std::llround(truncation.value)));
  if (truncation.mode == "energy") return TruncationSpec::energyCutoff(truncation.value);
  throw ConfigError("/truncation/mode", "must be \"qubits\" or \"energy\"");
}

EnumerationOptions RunConfig::enumerationOptions() const {
  EnumerationOptions opts;
  opts.evenParticleNumberOnly = truncation.evenParticleNumberOnly;
  return opts;
}

void RunConfig::validate() const {
  model.validate();
  truncationSpec();
  packet.validate();
  if (schedule.freeDisplacementTime < 0)
    throw ConfigError("/schedule/freeDisplacementTime", "must be >= 0");
  if (schedule.rampTau < 0) throw ConfigError("/schedule/rampTau", "must be >= 0");
  if (schedule.rampSteps < 1) throw ConfigError("/schedule/rampSteps", "must be >= 1");
  if (!(schedule.dt > 0)) throw ConfigError("/schedule/dt", "must be > 0");
  if (schedule.tMax < 0) throw ConfigError("/schedule/tMax", "must be >= 0");
  if (schedule.sampleEvery < 1) throw ConfigError("/schedule/sampleEvery", "must be >= 1");
  const auto steps = static_cast<long long>(std::llround(schedule.tMax / schedule.dt));
  if (steps % schedule.sampleEvery != 0)
    throw ConfigError("/schedule/sampleEvery", "must divide the step count tMax/dt evenly");
  if (observables.gridSize < 2) throw ConfigError("/observables/gridSize", "must be >= 2");
  if (outputs.directory.empty()) throw ConfigError("/outputs/directory", "must be non-empty");
  if (resources.eMaxGrid.empty()) throw ConfigError("/resources/eMaxGrid", "must be non-empty");
  if (resources.epsilonGrid.empty())
    throw ConfigError("/resources/epsilonGrid", "must be non-empty");
  for (double e : resources.epsilonGrid)
    if (!(e > 0 && e < 1)) throw ConfigError("/resources/epsilonGrid", "entries must be in (0,1)");
  if (resources.nQubitsPerSite < 1) throw ConfigError("/resources/nQubitsPerSite", "must be >= 1");
  if (resources.sparsityQubitsMin < 1 || resources.sparsityQubitsMax < resources.sparsityQubitsMin)
    throw ConfigError("/resources/sparsityQubits", "bad qubit range");
  if (circuit.dropThreshold < 0) throw ConfigError("/circuit/dropThreshold", "must be >= 0");
  if (circuit.dt < 0) throw ConfigError("/circuit/dt", "must be >= 0");
  if (circuit.dt > 0 && circuit.dt > schedule.rampTau)
    throw ConfigError("/circuit/dt", "must not exceed the ramp duration");
}

RunConfig configFromJsonText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("line " + std::to_string(lineOfOffset(text, e.byte)),
                      std::string("JSON syntax error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("/", "top level must be an object");

  RunConfig config;
  if (const json* m = find(j, "model")) {
    if (const json* v = find(*m, "M")) config.model.mass = requireNumber(*v, "/model/M");
    if (const json* v = find(*m, "L")) config.model.circumference = requireNumber(*v, "/model/L");
    if (const json* v = find(*m, "g")) config.model.coupling = requireNumber(*v, "/model/g");
  }
  if (const json* t = find(j, "truncation")) {
    if (const json* v = find(*t, "mode")) config.truncation.mode = requireString(*v, "/truncation/mode");
    if (const json* v = find(*t, "value")) config.truncation.value = requireNumber(*v, "/truncation/value");
    if (const json* v = find(*t, "evenParticleNumberOnly"))
      config.truncation.evenParticleNumberOnly =
          requireBool(*v, "/truncation/evenParticleNumberOnly");
  }
  if (const json* p = find(j, "packet")) {
    if (const json* v = find(*p, "p0")) config.packet.p0 = requireNumber(*v, "/packet/p0");
    if (const json* v = find(*p, "delta")) config.packet.delta = requireNumber(*v, "/packet/delta");
  }
  if (const json* s = find(j, "schedule")) {
    if (const json* v = find(*s, "freeDisplacementTime"))
      config.schedule.freeDisplacementTime = requireNumber(*v, "/schedule/freeDisplacementTime");
    if (const json* v = find(*s, "rampTau")) config.schedule.rampTau = requireNumber(*v, "/schedule/rampTau");
    if (const json* v = find(*s, "rampSteps")) config.schedule.rampSteps = requireInt(*v, "/schedule/rampSteps");
    if (const json* v = find(*s, "dt")) config.schedule.dt = requireNumber(*v, "/schedule/dt");
    if (const json* v = find(*s, "tMax")) config.schedule.tMax = requireNumber(*v, "/schedule/tMax");
    if (const json* v = find(*s, "sampleEvery")) config.schedule.sampleEvery = requireInt(*v, "/schedule/sampleEvery");
  }
  if (const json* o = find(j, "observables")) {
    if (const json* v = find(*o, "gridSize")) config.observables.gridSize = requireInt(*v, "/observables/gridSize");
  }
  if (const json* o = find(j, "outputs")) {
    if (const json* v = find(*o, "directory")) config.outputs.directory = requireString(*v, "/outputs/directory");
    if (const json* v = find(*o, "formats")) {
      if (!v->is_array()) throw ConfigError("/outputs/formats", "expected an array");
      config.outputs.formats.clear();
      for (const auto& f : *v) config.outputs.formats.push_back(requireString(f, "/outputs/formats"));
    }
  }
  if (const json* r = find(j, "resources")) {
    if (const json* v = find(*r, "eMaxGrid")) config.resources.eMaxGrid = requireNumberArray(*v, "/resources/eMaxGrid");
    if (const json* v = find(*r, "epsilonGrid"))
      config.resources.epsilonGrid = requireNumberArray(*v, "/resources/epsilonGrid");
    if (const json* v = find(*r, "nQubitsPerSite"))
      config.resources.nQubitsPerSite = requireInt(*v, "/resources/nQubitsPerSite");
    if (const json* v = find(*r, "sparsityQubitsMin"))
      config.resources.sparsityQubitsMin = requireInt(*v, "/resources/sparsityQubitsMin");
    if (const json* v = find(*r, "sparsityQubitsMax"))
      config.resources.sparsityQubitsMax = requireInt(*v, "/resources/sparsityQubitsMax");
  }
  if (const json* c = find(j, "circuit")) {
    if (const json* v = find(*c, "reorderStatePrep"))
      config.circuit.reorderStatePrep = requireBool(*v, "/circuit/reorderStatePrep");
    if (const json* v = find(*c, "dropThreshold"))
      config.circuit.dropThreshold = requireNumber(*v, "/circuit/dropThreshold");
    if (const json* v = find(*c, "dt")) config.circuit.dt = requireNumber(*v, "/circuit/dt");
  }
  config.validate();
  return config;
}

std::string configToJsonText(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["model"] = {{"M", c.model.mass}, {"L", c.model.circumference}, {"g", c.model.coupling}};
  j["truncation"] = {{"mode", c.truncation.mode},
                     {"value", c.truncation.value},
                     {"evenParticleNumberOnly", c.truncation.evenParticleNumberOnly}};
  j["packet"] = {{"p0", c.packet.p0}, {"delta", c.packet.delta}};
  j["schedule"] = {{"freeDisplacementTime", c.schedule.freeDisplacementTime},
                   {"rampTau", c.schedule.rampTau},
                   {"rampSteps", c.schedule.rampSteps},
                   {"dt", c.schedule.dt},
                   {"tMax", c.schedule.tMax},
                   {"sampleEvery", c.schedule.sampleEvery}};
  j["observables"] = {{"gridSize", c.observables.gridSize}};
  j["outputs"] = {{"directory", c.outputs.directory}, {"formats", c.outputs.formats}};
  j["resources"] = {{"eMaxGrid", c.resources.eMaxGrid},
                    {"epsilonGrid", c.resources.epsilonGrid},
                    {"nQubitsPerSite", c.resources.nQubitsPerSite},
                    {"sparsityQubitsMin", c.resources.sparsityQubitsMin},
                    {"sparsityQubitsMax", c.resources.sparsityQubitsMax}};
  j["circuit"] = {{"reorderStatePrep", c.circuit.reorderStatePrep},
                  {"dropThreshold", c.circuit.dropThreshold},
                  {"dt", c.circuit.dt}};
  return j.dump(2) + "\n";
}

std::string configHash(const RunConfig& config) {
  const std::string canonical = configToJsonText(config);
  return hexDigest(fnv1a64(canonical.data(), canonical.size()));
}

}  // namespace htsim
