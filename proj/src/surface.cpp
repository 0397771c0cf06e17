#include "vbt/surface.hpp"

#include <numeric>

#include <json.hpp>

namespace vbt {

int MarkedSurfaceSpec::marked_total() const {
  return std::accumulate(marked_per_boundary.begin(), marked_per_boundary.end(), 0);
}

int MarkedSurfaceSpec::vortex_sign(int index) const {
  if (index < 1 || index > punctures)
    throw ValidationError("vortex index out of range: " + std::to_string(index));
  if (vortex_signs.empty()) return 1;
  return vortex_signs[static_cast<std::size_t>(index) - 1];
}

void MarkedSurfaceSpec::validate() const {
  if (genus < 0) throw ValidationError("genus must be nonnegative");
  if (marked_per_boundary.empty())
    throw ValidationError("at least one boundary component is required");
  for (int m : marked_per_boundary)
    if (m < 1) throw ValidationError("every boundary component needs a marked point");
  if (punctures < 0) throw ValidationError("puncture count must be nonnegative");
  if (!vortex_signs.empty() &&
      vortex_signs.size() != static_cast<std::size_t>(punctures))
    throw ValidationError("vortex_signs length must equal the puncture count");
  for (int s : vortex_signs)
    if (s != 1 && s != -1) throw ValidationError("vortex signs must be +1 or -1");
}

int rank(const MarkedSurfaceSpec& spec) {
  spec.validate();
  return 6 * spec.genus + 3 * spec.punctures + 3 * spec.boundary_count() +
         spec.marked_total() - 6;
}

int decoration_count(const MarkedSurfaceSpec& spec) {
  spec.validate();
  return 4 * spec.genus + 2 * spec.punctures + 2 * spec.boundary_count() +
         spec.marked_total() - 4;
}

AbelianGroupInvariants h1_punctured(const MarkedSurfaceSpec& spec) {
  spec.validate();
  return {2 * spec.genus + spec.boundary_count() - 1 + spec.punctures, {}};
}

AbelianGroupInvariants h1_vortex(const MarkedSurfaceSpec& spec) {
  spec.validate();
  AbelianGroupInvariants inv;
  inv.free_rank = 2 * spec.genus + spec.boundary_count() - 1;
  inv.torsion.assign(static_cast<std::size_t>(spec.punctures), 2);
  return inv;
}

std::string to_json(const MarkedSurfaceSpec& spec) {
  nlohmann::json j;
  j["genus"] = spec.genus;
  j["boundary"] = spec.marked_per_boundary;
  j["punctures"] = spec.punctures;
  std::vector<int> signs = spec.vortex_signs;
  if (signs.empty()) signs.assign(static_cast<std::size_t>(spec.punctures), 1);
  j["vortex_signs"] = signs;
  return j.dump();
}

MarkedSurfaceSpec surface_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad surface JSON: ") + e.what());
  }
  MarkedSurfaceSpec spec;
  try {
    spec.genus = j.at("genus").get<int>();
    spec.marked_per_boundary = j.at("boundary").get<std::vector<int>>();
    spec.punctures = j.at("punctures").get<int>();
    if (j.contains("vortex_signs"))
      spec.vortex_signs = j.at("vortex_signs").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad surface JSON: ") + e.what());
  }
  spec.validate();
  return spec;
}

} // namespace vbt
