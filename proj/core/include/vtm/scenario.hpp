#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "vtm/analysis.hpp"
#include "vtm/model.hpp"

namespace vtm {

// Condition toggles for what-if analysis. Defaults: reliable IDs available,
// no code voting, no print-on-demand.
struct ScenarioEnv {
  std::array<bool, kConditionCount> values{true, false, false};

  bool value(Condition c) const { return values[index_of(c)]; }
  void set(Condition c, bool v) { values[index_of(c)] = v; }

  static ScenarioEnv defaults() { return {}; }

  friend bool operator==(const ScenarioEnv&, const ScenarioEnv&) = default;
};

// A set of corrupted parties.
struct Coalition {
  std::vector<Party> parties;  // sorted, unique

  bool contains(Party p) const;
  std::size_t size() const { return parties.size(); }

  static Coalition of(std::initializer_list<Party> ps);

  friend bool operator==(const Coalition&, const Coalition&) = default;
};

// The cell set minus assumptions voided by the environment. An assumption is
// voided iff it carries at least one conditional note and every conditional
// note it carries has its voiding condition true; assumptions with no
// conditional note always remain.
std::vector<TrustAssumption> effective_assumptions(const TrustModel& model,
                                                   System system, Goal goal,
                                                   const ScenarioEnv& env);

// Breach outcome for one (system, goal): the maximum impact among effective
// assumptions whose party is corrupted, or absent when none is. Trust mode
// does not discount the breach level.
struct BreachFinding {
  std::optional<Impact> level;
  std::vector<TrustAssumption> triggered;
};

BreachFinding breach(const TrustModel& model, System system, Goal goal,
                     const Coalition& coalition, const ScenarioEnv& env);

// breach over every (system, goal) of the model, or one system's goals.
struct BreachReport {
  struct Entry {
    System system{};
    Goal goal{};
    BreachFinding finding;
  };
  Coalition coalition;
  ScenarioEnv env;
  std::vector<Entry> entries;
};

BreachReport breach_report(const TrustModel& model, const Coalition& coalition,
                           const ScenarioEnv& env,
                           std::optional<System> only_system = std::nullopt);

// All inclusion-minimal coalitions reaching breach level >= target, found by
// exhaustive enumeration of the 2^12 party subsets. Ordered by size, then
// lexicographically by party order.
std::vector<Coalition> minimal_coalitions(const TrustModel& model,
                                          System system, Goal goal,
                                          Impact target,
                                          const ScenarioEnv& env);

// Per goal, the smallest breaking coalition size for each impact level
// (absent when the level is unreachable). Agrees with minimal_coalitions.
struct ResilienceEntry {
  Goal goal{};
  std::array<std::optional<std::size_t>, 3> min_coalition_size{};

  std::optional<std::size_t> at(Impact level) const {
    return min_coalition_size[impact_rank(level) - 1];
  }
};

std::vector<ResilienceEntry> system_resilience(const TrustModel& model,
                                               System system,
                                               const ScenarioEnv& env);

// Cell selector for what-if removal.
struct CellRef {
  System system{};
  Goal goal{};
  Party party{};

  friend bool operator==(const CellRef&, const CellRef&) = default;
};

struct ProfileDelta {
  System system{};
  Goal goal{};
  CriticalityProfile before;
  CriticalityProfile after;
};

struct RankDelta {
  Goal goal{};
  std::vector<RankEntry> before;
  std::vector<RankEntry> after;
};

struct DeltaReport {
  std::vector<CellRef> removed;
  std::vector<ProfileDelta> profiles;  // per removed (system, goal)
  std::vector<RankDelta> ranks;        // per affected goal

  bool empty() const { return removed.empty(); }
};

struct WhatIfRemoveResult {
  TrustModel model;  // input with the selected cells removed
  DeltaReport delta;
};

// Removes the selected cells from a copy of the model and reports profile
// and rank changes under the given weights. Throws std::invalid_argument if
// a selector names a cell that does not exist.
WhatIfRemoveResult whatif_remove(
    const TrustModel& model, std::span<const CellRef> selectors,
    const WeightConfig& weights = WeightConfig::defaults());

// Scenario file contents: corrupted parties plus condition settings.
struct Scenario {
  Coalition coalition;
  ScenarioEnv env;
};

struct ScenarioParseResult {
  std::optional<Scenario> scenario;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return scenario.has_value(); }
};

// .vts format: lines of `corrupt PARTY;` and `set CONDITION = true|false;`,
// `#` comments. Unspecified conditions keep their defaults.
ScenarioParseResult parse_scenario(std::string_view text,
                                   std::string file_name);

}  // namespace vtm
