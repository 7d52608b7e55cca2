#pragma once

#include <span>
#include <string>
#include <vector>

namespace vtm {

// 1-based position in an input file.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class DiagnosticSeverity { error, warning };

// Errors prevent model construction; warnings do not.
struct ParseDiagnostic {
  DiagnosticSeverity severity = DiagnosticSeverity::error;
  std::string message;
  SourceSpan span;

  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) =
      default;
};

// "file:line:col: error: message"
std::string to_string(const ParseDiagnostic& d);

// One diagnostic per line, in order.
std::string render_diagnostics(std::span<const ParseDiagnostic> ds);

bool has_errors(std::span<const ParseDiagnostic> ds);

}  // namespace vtm
