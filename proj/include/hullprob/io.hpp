#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "hullprob/hull_dp.hpp"
#include "hullprob/instance.hpp"
#include "hullprob/reductions.hpp"

namespace hullprob {

/// {"points": [{"x": "n/d", "y": "n/d", "p": "n/d"}, ...]}. Integers may also
/// be given as JSON numbers. Throws Parse on malformed input and
/// InvalidInstance on a probability outside [0, 1].
StochasticInstance parse_instance(const std::string& text);
/// Canonical rendering; parse_instance(instance_json(x)) == x.
std::string instance_json(const StochasticInstance& inst);

/// {"mode": "perimeter", "edges": [[u, v, w], ...]} or
/// {"mode": "area", "triangles": [[apex, u, v, w], ...]}; unlisted entries are 0.
WeightAssignment parse_weights(const std::string& text, std::size_t n);

std::string area_sidecar_json(const AreaGadget& g);
std::string perimeter_sidecar_json(const PerimeterGadget& g);

using Gadget = std::variant<AreaGadget, PerimeterGadget>;
/// Pairs `instance` with the sidecar fields. The construction checks are not
/// re-run, so a corrupted sidecar surfaces at recovery time.
Gadget parse_gadget(const std::string& sidecar, StochasticInstance instance);

/// Io errors carry the path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hullprob
