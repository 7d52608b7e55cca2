#include "vtm/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace vtm {

namespace {

std::tuple<std::size_t, std::size_t, std::size_t> cell_key(
    const TrustAssumption& a) {
  return {index_of(a.system), index_of(a.goal), index_of(a.party)};
}

std::string cell_name(System s, Goal g, Party p) {
  std::ostringstream os;
  os << '(' << token(s) << ", " << token(g) << ", " << token(p) << ')';
  return os.str();
}

}  // namespace

bool cell_key_less(const TrustAssumption& a, const TrustAssumption& b) {
  return cell_key(a) < cell_key(b);
}

std::vector<ParseDiagnostic> validate_model(const ModelData& data,
                                            const std::string& file_name) {
  std::vector<ParseDiagnostic> diags;
  SourceSpan at{file_name, 1, 1};
  auto error = [&](std::string msg) {
    diags.push_back({DiagnosticSeverity::error, std::move(msg), at});
  };
  auto warning = [&](std::string msg) {
    diags.push_back({DiagnosticSeverity::warning, std::move(msg), at});
  };

  std::set<System> systems(data.systems.begin(), data.systems.end());
  std::set<Goal> goals(data.goals.begin(), data.goals.end());

  std::map<int, const ConditionNote*> catalog;
  for (const auto& note : data.notes) {
    auto [it, inserted] = catalog.emplace(note.id, &note);
    if (!inserted && !(*it->second == note)) {
      error("conflicting note " + std::to_string(note.id) +
            ": declared more than once with different content");
    }
  }

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
           const TrustAssumption*>
      cells;
  for (const auto& a : data.assumptions) {
    if (!systems.contains(a.system)) {
      error("assumption " + cell_name(a.system, a.goal, a.party) +
            " references undeclared system '" + std::string(token(a.system)) +
            "'");
    }
    if (!goals.contains(a.goal)) {
      error("assumption " + cell_name(a.system, a.goal, a.party) +
            " references undeclared goal '" + std::string(token(a.goal)) +
            "'");
    }
    auto [it, inserted] = cells.emplace(cell_key(a), &a);
    if (!inserted) {
      error("duplicate cell " + cell_name(a.system, a.goal, a.party));
    }
    for (int id : a.notes) {
      if (!catalog.contains(id)) {
        error("undeclared note " + std::to_string(id) + " referenced by " +
              cell_name(a.system, a.goal, a.party));
      }
    }
  }

  // Informational: declared pairs with no cells.
  for (System s : canonical_systems()) {
    if (!systems.contains(s)) continue;
    for (Goal g : canonical_goals()) {
      if (!goals.contains(g)) continue;
      bool any = std::any_of(
          data.assumptions.begin(), data.assumptions.end(),
          [&](const TrustAssumption& a) { return a.system == s && a.goal == g; });
      if (!any) {
        warning("system '" + std::string(token(s)) +
                "' has no assumptions for goal '" + std::string(token(g)) +
                "'");
      }
    }
  }

  return diags;
}

std::vector<ParseDiagnostic> validate_model(const TrustModel& model) {
  return validate_model(model.data(), "<model>");
}

ParseResult TrustModel::create(ModelData data, const std::string& origin) {
  // Normalize note lists inside assumptions before validating, so equality
  // and duplicate detection see canonical values.
  for (auto& a : data.assumptions) {
    std::sort(a.notes.begin(), a.notes.end());
    a.notes.erase(std::unique(a.notes.begin(), a.notes.end()), a.notes.end());
  }

  ParseResult result;
  for (auto& d : validate_model(data, origin)) {
    // Construction cares about the hard invariants only; informational
    // warnings belong to explicit validate_model calls.
    if (d.severity == DiagnosticSeverity::error)
      result.diagnostics.push_back(std::move(d));
  }
  if (has_errors(result.diagnostics)) return result;

  TrustModel m;
  m.provenance_ = std::move(data.provenance);

  std::set<System> systems(data.systems.begin(), data.systems.end());
  for (System s : canonical_systems()) {
    if (systems.contains(s)) m.systems_.push_back(s);
  }
  std::set<Goal> goals(data.goals.begin(), data.goals.end());
  for (Goal g : canonical_goals()) {
    if (goals.contains(g)) m.goals_.push_back(g);
  }

  m.assumptions_ = std::move(data.assumptions);
  std::sort(m.assumptions_.begin(), m.assumptions_.end(), cell_key_less);

  std::map<int, ConditionNote> catalog;
  for (auto& note : data.notes) catalog.try_emplace(note.id, std::move(note));
  for (auto& [id, note] : catalog) m.notes_.push_back(std::move(note));

  result.model = std::move(m);
  return result;
}

bool TrustModel::has_system(System s) const {
  return std::find(systems_.begin(), systems_.end(), s) != systems_.end();
}

bool TrustModel::has_goal(Goal g) const {
  return std::find(goals_.begin(), goals_.end(), g) != goals_.end();
}

std::span<const TrustAssumption> TrustModel::assumptions(System s,
                                                         Goal g) const {
  TrustAssumption lo{s, g, Party::voter, {}, {}, {}};
  auto begin = std::lower_bound(assumptions_.begin(), assumptions_.end(), lo,
                                cell_key_less);
  auto end = begin;
  while (end != assumptions_.end() && end->system == s && end->goal == g) {
    ++end;
  }
  return {begin, end};
}

const TrustAssumption* TrustModel::find(System s, Goal g, Party p) const {
  for (const auto& a : assumptions(s, g)) {
    if (a.party == p) return &a;
  }
  return nullptr;
}

const ConditionNote* TrustModel::find_note(int id) const {
  auto it = std::lower_bound(
      notes_.begin(), notes_.end(), id,
      [](const ConditionNote& n, int v) { return n.id < v; });
  if (it == notes_.end() || it->id != id) return nullptr;
  return &*it;
}

ModelData TrustModel::data() const {
  ModelData d;
  d.systems = systems_;
  d.goals = goals_;
  d.assumptions = assumptions_;
  d.notes = notes_;
  d.provenance = provenance_;
  return d;
}

TrustModel TrustModel::with_provenance(std::string provenance) const {
  TrustModel copy = *this;
  copy.provenance_ = std::move(provenance);
  return copy;
}

bool operator==(const TrustModel& a, const TrustModel& b) {
  return a.systems_ == b.systems_ && a.goals_ == b.goals_ &&
         a.assumptions_ == b.assumptions_ && a.notes_ == b.notes_;
}

}  // namespace vtm
