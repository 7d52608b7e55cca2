#include "vtm/serialize.hpp"

#include <sstream>

namespace vtm {

namespace {

void append_quoted(std::string& out, std::string_view text) {
  out += '"';
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c; break;
    }
  }
  out += '"';
}

}  // namespace

std::string serialize_assumption(const TrustAssumption& a) {
  std::string line = "trust ";
  line += token(a.party);
  line += " { impact = ";
  line += token(a.severity.impact);
  line += ";";
  if (a.severity.mode != TrustMode::full) {
    line += " mode = ";
    line += token(a.severity.mode);
    line += ";";
  }
  if (!a.notes.empty()) {
    line += " notes = ";
    for (std::size_t i = 0; i < a.notes.size(); ++i) {
      if (i) line += ", ";
      line += std::to_string(a.notes[i]);
    }
    line += ";";
  }
  if (!a.rationale.empty()) {
    line += " rationale = ";
    append_quoted(line, a.rationale);
    line += ";";
  }
  line += " }";
  return line;
}

std::string serialize_model(const TrustModel& model) {
  std::string out = "# vtm v1\n";

  for (const ConditionNote& note : model.notes()) {
    out += "note ";
    out += std::to_string(note.id);
    out += ' ';
    append_quoted(out, note.text);
    if (note.voided_when) {
      out += " when ";
      out += token(*note.voided_when);
    }
    out += ";\n";
  }

  for (System s : model.systems()) {
    out += "\nsystem ";
    append_quoted(out, display_name(s));
    out += " {\n";
    for (Goal g : model.goals()) {
      out += "  goal ";
      out += token(g);
      out += " {\n";
      for (const TrustAssumption& a : model.assumptions(s, g)) {
        out += "    ";
        out += serialize_assumption(a);
        out += '\n';
      }
      out += "  }\n";
    }
    out += "}\n";
  }

  return out;
}

}  // namespace vtm
