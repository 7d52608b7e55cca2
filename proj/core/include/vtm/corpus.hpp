#pragma once

#include <stdexcept>
#include <string_view>

#include "vtm/model.hpp"

namespace vtm {

// Bundled corpus data is compiled into the library and must always load;
// anything else is a build defect.
struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Embedded copies of the bundled corpus/*.vtm files.
std::string_view builtin_table_text();
std::string_view builtin_notes_text();
std::string_view builtin_claims_text();

// Parses and merges the bundled matrix and note catalog into the validated
// reference model: 8 systems, 7 goals, 14 notes. Rows the source table
// merges across machinery variants are present for both variants. Throws
// CorpusError with the diagnostics if the bundled data is corrupted.
TrustModel load_builtin_corpus();

}  // namespace vtm
