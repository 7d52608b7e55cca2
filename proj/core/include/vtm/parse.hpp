#pragma once

#include <span>
#include <string>
#include <string_view>

#include "vtm/model.hpp"

namespace vtm {

struct SourceFile {
  std::string name;
  std::string text;
};

// Parses one .vtm document. On success the result holds a validated model;
// on failure at least one error diagnostic with a source span. Duplicate
// cells, unknown vocabulary tokens and references to undeclared notes are
// errors; a "# vtm vN" header with N != 1 is a warning.
ParseResult parse_model(std::string_view text, std::string file_name);

// Parses several files as one document sharing a single note catalog and
// cell table, so later files may reference notes declared in earlier ones.
// Spans point into the individual files.
ParseResult parse_model_files(std::span<const SourceFile> files);

}  // namespace vtm
