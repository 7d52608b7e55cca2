#include "vtm/diagnostics.hpp"

#include <sstream>

namespace vtm {

std::string to_string(const ParseDiagnostic& d) {
  std::ostringstream os;
  os << d.span.file << ':' << d.span.line << ':' << d.span.column << ": "
     << (d.severity == DiagnosticSeverity::error ? "error" : "warning") << ": "
     << d.message;
  return os.str();
}

std::string render_diagnostics(std::span<const ParseDiagnostic> ds) {
  std::string out;
  for (const auto& d : ds) {
    out += to_string(d);
    out += '\n';
  }
  return out;
}

bool has_errors(std::span<const ParseDiagnostic> ds) {
  for (const auto& d : ds) {
    if (d.severity == DiagnosticSeverity::error) return true;
  }
  return false;
}

}  // namespace vtm
