#pragma once

#include <string>

#include "vtm/model.hpp"

namespace vtm {

// Canonical text form: "# vtm v1" header, notes sorted by id, systems in
// canonical order, the model's goals as a block under every system, cells
// one per line in party order. `mode = full` is the default and is omitted.
// LF line endings. parse_model(serialize_model(m)) reproduces m.
std::string serialize_model(const TrustModel& model);

// Canonical text for a single assumption, as emitted inside a goal block.
std::string serialize_assumption(const TrustAssumption& a);

}  // namespace vtm
