#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "vtm/model.hpp"
#include "vtm/rational.hpp"

namespace vtm {

// Assumption counts for one (system, goal), broken down by impact level and
// trust mode. total == sum over impacts == sum over modes.
struct CriticalityProfile {
  long long total = 0;
  std::array<long long, 3> by_impact{};  // indexed by impact_rank - 1
  std::array<long long, 2> by_mode{};    // indexed by mode_rank - 1

  long long count(Impact i) const { return by_impact[impact_rank(i) - 1]; }
  long long count(TrustMode m) const { return by_mode[mode_rank(m) - 1]; }

  friend bool operator==(const CriticalityProfile&,
                         const CriticalityProfile&) = default;
};

// The cell set for (system, goal). Throws std::invalid_argument when the
// system or goal is not declared in the model.
std::span<const TrustAssumption> assumption_set(const TrustModel& model,
                                                System system, Goal goal);

CriticalityProfile profile(const TrustModel& model, System system, Goal goal);

enum class DominanceRelation {
  equal,
  strictly_dominates,
  strictly_dominated_by,
  incomparable,
};

std::string_view token(DominanceRelation r);

// One reason a system's burden is not covered by the other side: either the
// party is trusted only on this side, or it is trusted on both sides but not
// at comparable-or-lower severity here.
struct DominanceObstruction {
  Goal goal{};
  Party party{};
  bool severity_conflict = false;  // false: party missing from the other side

  friend bool operator==(const DominanceObstruction&,
                         const DominanceObstruction&) = default;
};

// a <= b on a goal iff a's trusted parties are a subset of b's and every
// shared party is trusted at severity <= b's (product order). Overall scope
// requires that on all seven goals. Witnesses justify each failed direction.
struct DominanceResult {
  DominanceRelation relation = DominanceRelation::equal;
  std::vector<DominanceObstruction> a_not_leq_b;
  std::vector<DominanceObstruction> b_not_leq_a;
};

DominanceResult dominance(const TrustModel& model, System a, System b,
                          std::optional<Goal> scope);

// Dominance-equivalence classes not strictly dominated by any other class,
// members and classes in canonical order.
std::vector<std::vector<System>> pareto_frontier(const TrustModel& model,
                                                 Goal goal);

// Score weights: one weight per impact level plus a discount for
// conditional-mode assumptions. Admissible iff 0 <= w_single <= w_subset <=
// w_all and 0 < conditional_factor <= 1.
struct WeightConfig {
  Rational w_single{1};
  Rational w_subset{4};
  Rational w_all{16};
  Rational conditional_factor{1, 2};

  bool admissible() const;
  Rational weight(Impact i) const;

  static WeightConfig defaults() { return {}; }

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

// Weighted assumption burden; lower is better. Exact rational arithmetic.
// Throws std::invalid_argument on inadmissible weights or unknown
// system/goal references.
Rational score(const TrustModel& model, System system,
               std::optional<Goal> scope, const WeightConfig& weights);

struct RankEntry {
  System system{};
  Rational score;
  std::size_t tie_group = 0;  // 0-based dense group index; equal score = same group

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

// All systems of the model ascending by score; ties share a group and are
// listed in canonical order.
std::vector<RankEntry> rank(const TrustModel& model, std::optional<Goal> scope,
                            const WeightConfig& weights);

struct MatrixCell {
  Impact impact{};
  TrustMode mode{};
  std::vector<int> notes;

  friend bool operator==(const MatrixCell&, const MatrixCell&) = default;
};

// Tabular projection of one goal: rows are the model's systems in canonical
// order, columns the 12 parties, empty cells explicit.
struct GoalMatrix {
  Goal goal{};
  std::vector<System> systems;
  std::vector<std::array<std::optional<MatrixCell>, kPartyCount>> rows;

  std::size_t filled_cell_count() const;
};

GoalMatrix goal_matrix(const TrustModel& model, Goal goal);

}  // namespace vtm
