#pragma once

#include <string>
#include <string_view>

#include "vtm/model.hpp"

namespace vtm {

// JSON rendering of a model. Field names mirror the text format vocabulary
// (system, goal, trust/party, impact, mode, notes, rationale, note, when);
// arrays are in canonical order, so output is byte-stable.
std::string model_to_json(const TrustModel& model, int indent = 2);

// Inverse of model_to_json: builds a model through the same validation path
// as the text parser. Diagnostics use the given file name.
ParseResult model_from_json(std::string_view json_text, std::string file_name);

}  // namespace vtm
