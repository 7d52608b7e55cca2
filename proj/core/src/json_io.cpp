#include "vtm/json_io.hpp"

#include <json.hpp>

namespace vtm {

namespace {

using nlohmann::ordered_json;

const SourceSpan span_for(const std::string& file) { return {file, 1, 1}; }

}  // namespace

std::string model_to_json(const TrustModel& model, int indent) {
  ordered_json doc;
  doc["vtm"] = 1;
  if (!model.provenance().empty()) doc["provenance"] = model.provenance();

  auto& systems = doc["systems"] = ordered_json::array();
  for (System s : model.systems()) systems.push_back(token(s));

  auto& goals = doc["goals"] = ordered_json::array();
  for (Goal g : model.goals()) goals.push_back(token(g));

  auto& notes = doc["notes"] = ordered_json::array();
  for (const ConditionNote& note : model.notes()) {
    ordered_json n;
    n["note"] = note.id;
    n["text"] = note.text;
    if (note.voided_when) n["when"] = token(*note.voided_when);
    notes.push_back(std::move(n));
  }

  auto& assumptions = doc["assumptions"] = ordered_json::array();
  for (const TrustAssumption& a : model.assumptions()) {
    ordered_json cell;
    cell["system"] = token(a.system);
    cell["goal"] = token(a.goal);
    cell["party"] = token(a.party);
    cell["impact"] = token(a.severity.impact);
    cell["mode"] = token(a.severity.mode);
    if (!a.notes.empty()) cell["notes"] = a.notes;
    if (!a.rationale.empty()) cell["rationale"] = a.rationale;
    assumptions.push_back(std::move(cell));
  }

  return doc.dump(indent) + "\n";
}

ParseResult model_from_json(std::string_view json_text,
                            std::string file_name) {
  ParseResult result;
  auto error = [&](std::string msg) {
    result.diagnostics.push_back(
        {DiagnosticSeverity::error, std::move(msg), span_for(file_name)});
  };

  ordered_json doc = ordered_json::parse(json_text, nullptr,
                                         /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    error("invalid JSON document");
    return result;
  }
  if (!doc.is_object()) {
    error("expected a JSON object at top level");
    return result;
  }

  ModelData data;
  if (doc.contains("provenance") && doc["provenance"].is_string()) {
    data.provenance = doc["provenance"].get<std::string>();
  }

  if (doc.contains("systems")) {
    if (!doc["systems"].is_array()) {
      error("'systems' must be an array");
    } else {
      for (const auto& s : doc["systems"]) {
        auto system =
            s.is_string() ? system_from_token(s.get<std::string>())
                          : std::nullopt;
        if (!system) {
          error("unknown system token " + s.dump());
          continue;
        }
        data.systems.push_back(*system);
      }
    }
  }

  if (doc.contains("goals")) {
    if (!doc["goals"].is_array()) {
      error("'goals' must be an array");
    } else {
      for (const auto& g : doc["goals"]) {
        auto goal = g.is_string() ? goal_from_token(g.get<std::string>())
                                  : std::nullopt;
        if (!goal) {
          error("unknown goal token " + g.dump());
          continue;
        }
        data.goals.push_back(*goal);
      }
    }
  }

  if (doc.contains("notes")) {
    if (!doc["notes"].is_array()) {
      error("'notes' must be an array");
    } else {
      for (const auto& n : doc["notes"]) {
        if (!n.is_object() || !n.contains("note") ||
            !n["note"].is_number_integer() || !n.contains("text") ||
            !n["text"].is_string()) {
          error("note entries need an integer 'note' id and string 'text'");
          continue;
        }
        ConditionNote note;
        note.id = n["note"].get<int>();
        note.text = n["text"].get<std::string>();
        if (note.id < 1) {
          error("note id must be positive");
          continue;
        }
        if (n.contains("when")) {
          auto condition =
              n["when"].is_string()
                  ? condition_from_token(n["when"].get<std::string>())
                  : std::nullopt;
          if (!condition) {
            error("unknown condition token " + n["when"].dump());
            continue;
          }
          note.voided_when = *condition;
        }
        data.notes.push_back(std::move(note));
      }
    }
  }

  if (doc.contains("assumptions")) {
    if (!doc["assumptions"].is_array()) {
      error("'assumptions' must be an array");
    } else {
      for (const auto& c : doc["assumptions"]) {
        if (!c.is_object()) {
          error("assumption entries must be objects");
          continue;
        }
        auto str_field = [&](const char* key) -> std::optional<std::string> {
          if (!c.contains(key) || !c[key].is_string()) return std::nullopt;
          return c[key].get<std::string>();
        };
        auto sys = str_field("system");
        auto gol = str_field("goal");
        auto par = str_field("party");
        auto imp = str_field("impact");
        auto system = sys ? system_from_token(*sys) : std::nullopt;
        auto goal = gol ? goal_from_token(*gol) : std::nullopt;
        auto party = par ? party_from_token(*par) : std::nullopt;
        auto impact = imp ? impact_from_token(*imp) : std::nullopt;
        if (!system || !goal || !party || !impact) {
          error("assumption entry " + c.dump() +
                " needs valid system/goal/party/impact tokens");
          continue;
        }
        TrustAssumption a;
        a.system = *system;
        a.goal = *goal;
        a.party = *party;
        a.severity.impact = *impact;
        a.severity.mode = TrustMode::full;
        if (c.contains("mode")) {
          auto mode = c["mode"].is_string()
                          ? mode_from_token(c["mode"].get<std::string>())
                          : std::nullopt;
          if (!mode) {
            error("unknown mode token " + c["mode"].dump());
            continue;
          }
          a.severity.mode = *mode;
        }
        if (c.contains("notes")) {
          if (!c["notes"].is_array()) {
            error("'notes' of an assumption must be an array of ids");
            continue;
          }
          bool bad = false;
          for (const auto& id : c["notes"]) {
            if (!id.is_number_integer() || id.get<int>() < 1) {
              error("note ids must be positive integers");
              bad = true;
              break;
            }
            a.notes.push_back(id.get<int>());
          }
          if (bad) continue;
        }
        if (c.contains("rationale") && c["rationale"].is_string()) {
          a.rationale = c["rationale"].get<std::string>();
        }
        data.assumptions.push_back(std::move(a));
      }
    }
  }

  if (has_errors(result.diagnostics)) return result;

  ParseResult created = TrustModel::create(std::move(data), file_name);
  for (auto& d : created.diagnostics)
    result.diagnostics.push_back(std::move(d));
  if (!has_errors(result.diagnostics)) result.model = std::move(created.model);
  return result;
}

}  // namespace vtm
