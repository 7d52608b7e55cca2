#include "vtm/merge.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace vtm {

namespace {

const SourceSpan kMergeSpan{"<merge>", 1, 1};

std::string cell_name(const TrustAssumption& a) {
  std::ostringstream os;
  os << '(' << token(a.system) << ", " << token(a.goal) << ", "
     << token(a.party) << ')';
  return os.str();
}

}  // namespace

ParseResult merge_models(std::span<const TrustModel> models) {
  ParseResult result;
  auto error = [&](std::string msg) {
    result.diagnostics.push_back(
        {DiagnosticSeverity::error, std::move(msg), kMergeSpan});
  };
  auto warning = [&](std::string msg) {
    result.diagnostics.push_back(
        {DiagnosticSeverity::warning, std::move(msg), kMergeSpan});
  };

  std::set<System> systems;
  std::set<Goal> goals;
  std::map<int, ConditionNote> notes;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, TrustAssumption>
      cells;
  std::string provenance;

  for (const TrustModel& m : models) {
    for (System s : m.systems()) systems.insert(s);
    for (Goal g : m.goals()) goals.insert(g);

    for (const ConditionNote& note : m.notes()) {
      auto it = notes.find(note.id);
      if (it == notes.end()) {
        notes.emplace(note.id, note);
      } else if (!(it->second == note)) {
        error("conflicting note " + std::to_string(note.id) +
              ": inputs declare different content");
      }
    }

    for (const TrustAssumption& a : m.assumptions()) {
      auto key = std::tuple{index_of(a.system), index_of(a.goal),
                            index_of(a.party)};
      auto it = cells.find(key);
      if (it == cells.end()) {
        cells.emplace(key, a);
        continue;
      }
      TrustAssumption& existing = it->second;
      if (existing.severity == a.severity && existing.notes == a.notes) {
        warning("duplicate cell " + cell_name(a) + " (identical, merged)");
        // Keep the smallest non-empty rationale so merge order cannot
        // change the outcome.
        if (!a.rationale.empty() &&
            (existing.rationale.empty() || a.rationale < existing.rationale)) {
          existing.rationale = a.rationale;
        }
      } else {
        error("conflicting cell " + cell_name(a) +
              ": inputs disagree on severity or notes");
      }
    }

    if (!m.provenance().empty()) {
      if (!provenance.empty()) provenance += "; ";
      provenance += m.provenance();
    }
  }

  if (has_errors(result.diagnostics)) return result;

  ModelData data;
  data.systems.assign(systems.begin(), systems.end());
  data.goals.assign(goals.begin(), goals.end());
  for (auto& [key, cell] : cells) data.assumptions.push_back(std::move(cell));
  for (auto& [id, note] : notes) data.notes.push_back(std::move(note));
  data.provenance = std::move(provenance);

  ParseResult created = TrustModel::create(std::move(data), "<merge>");
  for (auto& d : created.diagnostics)
    result.diagnostics.push_back(std::move(d));
  if (!has_errors(result.diagnostics)) result.model = std::move(created.model);
  return result;
}

}  // namespace vtm
