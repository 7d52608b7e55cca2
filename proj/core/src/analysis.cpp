#include "vtm/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vtm {

namespace {

void require_system(const TrustModel& model, System s) {
  if (!model.has_system(s)) {
    throw std::invalid_argument("unknown system '" + std::string(token(s)) +
                                "' (not declared in the model)");
  }
}

void require_goal(const TrustModel& model, Goal g) {
  if (!model.has_goal(g)) {
    throw std::invalid_argument("unknown goal '" + std::string(token(g)) +
                                "' (not declared in the model)");
  }
}

// Severity by party for one (system, goal) row.
using Row = std::array<std::optional<SeverityKey>, kPartyCount>;

Row row_of(const TrustModel& model, System s, Goal g) {
  Row row;
  for (const TrustAssumption& a : model.assumptions(s, g)) {
    row[index_of(a.party)] = a.severity;
  }
  return row;
}

// Collects obstructions to "a <= b" on one goal.
void collect_obstructions(const Row& a, const Row& b, Goal goal,
                          std::vector<DominanceObstruction>& out) {
  for (Party p : canonical_parties()) {
    const auto& sa = a[index_of(p)];
    if (!sa) continue;
    const auto& sb = b[index_of(p)];
    if (!sb) {
      out.push_back({goal, p, false});
    } else if (!severity_leq(*sa, *sb)) {
      out.push_back({goal, p, true});
    }
  }
}

}  // namespace

std::string_view token(DominanceRelation r) {
  switch (r) {
    case DominanceRelation::equal: return "equal";
    case DominanceRelation::strictly_dominates: return "strictly_dominates";
    case DominanceRelation::strictly_dominated_by:
      return "strictly_dominated_by";
    case DominanceRelation::incomparable: return "incomparable";
  }
  return "?";
}

std::span<const TrustAssumption> assumption_set(const TrustModel& model,
                                                System system, Goal goal) {
  require_system(model, system);
  require_goal(model, goal);
  return model.assumptions(system, goal);
}

CriticalityProfile profile(const TrustModel& model, System system, Goal goal) {
  CriticalityProfile p;
  for (const TrustAssumption& a : assumption_set(model, system, goal)) {
    ++p.total;
    ++p.by_impact[impact_rank(a.severity.impact) - 1];
    ++p.by_mode[mode_rank(a.severity.mode) - 1];
  }
  return p;
}

DominanceResult dominance(const TrustModel& model, System a, System b,
                          std::optional<Goal> scope) {
  require_system(model, a);
  require_system(model, b);

  DominanceResult result;
  auto goals = scope ? std::span<const Goal>(&*scope, 1) : canonical_goals();
  for (Goal g : goals) {
    Row row_a = row_of(model, a, g);
    Row row_b = row_of(model, b, g);
    collect_obstructions(row_a, row_b, g, result.a_not_leq_b);
    collect_obstructions(row_b, row_a, g, result.b_not_leq_a);
  }

  const bool a_leq_b = result.a_not_leq_b.empty();
  const bool b_leq_a = result.b_not_leq_a.empty();
  if (a_leq_b && b_leq_a) {
    result.relation = DominanceRelation::equal;
  } else if (a_leq_b) {
    result.relation = DominanceRelation::strictly_dominates;
  } else if (b_leq_a) {
    result.relation = DominanceRelation::strictly_dominated_by;
  } else {
    result.relation = DominanceRelation::incomparable;
  }
  return result;
}

std::vector<std::vector<System>> pareto_frontier(const TrustModel& model,
                                                 Goal goal) {
  require_goal(model, goal);

  const std::span<const System> systems = model.systems();
  const std::size_t n = systems.size();

  std::vector<Row> rows;
  rows.reserve(n);
  for (System s : systems) rows.push_back(row_of(model, s, goal));

  auto leq = [&](std::size_t i, std::size_t j) {
    std::vector<DominanceObstruction> obstructions;
    collect_obstructions(rows[i], rows[j], goal, obstructions);
    return obstructions.empty();
  };

  // Group mutually dominating systems into classes (canonical order keeps
  // the grouping deterministic).
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(n, 0);
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    classes.push_back({i});
    assigned[i] = true;
    class_of[i] = classes.size() - 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!assigned[j] && leq(i, j) && leq(j, i)) {
        classes.back().push_back(j);
        assigned[j] = true;
        class_of[j] = classes.size() - 1;
      }
    }
  }

  std::vector<std::vector<System>> frontier;
  for (const auto& cls : classes) {
    bool dominated = false;
    for (const auto& other : classes) {
      if (&other == &cls) continue;
      std::size_t o = other.front();
      std::size_t c = cls.front();
      if (leq(o, c) && !leq(c, o)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::vector<System> members;
    for (std::size_t idx : cls) members.push_back(systems[idx]);
    frontier.push_back(std::move(members));
  }
  return frontier;
}

bool WeightConfig::admissible() const {
  const Rational zero{0};
  const Rational one{1};
  return !(w_single < zero) && !(w_subset < w_single) && !(w_all < w_subset) &&
         conditional_factor > zero && !(conditional_factor > one);
}

Rational WeightConfig::weight(Impact i) const {
  switch (i) {
    case Impact::single: return w_single;
    case Impact::subset: return w_subset;
    case Impact::all: return w_all;
  }
  return Rational{0};
}

Rational score(const TrustModel& model, System system,
               std::optional<Goal> scope, const WeightConfig& weights) {
  if (!weights.admissible()) {
    throw std::invalid_argument(
        "inadmissible weights: need 0 <= single <= subset <= all and "
        "0 < conditional_factor <= 1");
  }
  require_system(model, system);
  if (scope) require_goal(model, *scope);

  Rational total{0};
  auto add_goal = [&](Goal g) {
    for (const TrustAssumption& a : model.assumptions(system, g)) {
      Rational w = weights.weight(a.severity.impact);
      if (a.severity.mode == TrustMode::conditional) {
        w = w * weights.conditional_factor;
      }
      total += w;
    }
  };
  if (scope) {
    add_goal(*scope);
  } else {
    for (Goal g : canonical_goals()) add_goal(g);
  }
  return total;
}

std::vector<RankEntry> rank(const TrustModel& model, std::optional<Goal> scope,
                            const WeightConfig& weights) {
  std::vector<RankEntry> entries;
  entries.reserve(model.systems().size());
  for (System s : model.systems()) {
    entries.push_back({s, score(model, s, scope, weights), 0});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RankEntry& a, const RankEntry& b) {
                     return a.score < b.score;
                   });
  std::size_t group = 0;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].score != entries[i - 1].score) ++group;
    entries[i].tie_group = group;
  }
  return entries;
}

std::size_t GoalMatrix::filled_cell_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) {
    for (const auto& cell : row) {
      if (cell) ++n;
    }
  }
  return n;
}

GoalMatrix goal_matrix(const TrustModel& model, Goal goal) {
  require_goal(model, goal);
  GoalMatrix matrix;
  matrix.goal = goal;
  for (System s : model.systems()) {
    matrix.systems.push_back(s);
    auto& row = matrix.rows.emplace_back();
    for (const TrustAssumption& a : model.assumptions(s, goal)) {
      row[index_of(a.party)] =
          MatrixCell{a.severity.impact, a.severity.mode, a.notes};
    }
  }
  return matrix;
}

}  // namespace vtm
