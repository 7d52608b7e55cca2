#pragma once

// Independent reference implementations used to cross-check the library.
// These deliberately avoid the library's dominance/coalition code paths and
// recompute everything from the raw model data with naive algorithms.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "vtm/model.hpp"
#include "vtm/scenario.hpp"

namespace vtm::testing {

// Severity order as a hand-written 6x6 truth table. Key index:
// (impact_rank - 1) * 2 + (mode_rank - 1), i.e.
// 0=(single,cond) 1=(single,full) 2=(subset,cond) 3=(subset,full)
// 4=(all,cond) 5=(all,full).
inline bool oracle_severity_leq(SeverityKey a, SeverityKey b) {
  static constexpr bool table[6][6] = {
      {true, true, true, true, true, true},
      {false, true, false, true, false, true},
      {false, false, true, true, true, true},
      {false, false, false, true, false, true},
      {false, false, false, false, true, true},
      {false, false, false, false, false, true},
  };
  auto idx = [](SeverityKey k) {
    return (impact_rank(k.impact) - 1) * 2 + (mode_rank(k.mode) - 1);
  };
  return table[idx(a)][idx(b)];
}

inline std::map<Party, SeverityKey> oracle_row(const TrustModel& m, System s,
                                               Goal g) {
  std::map<Party, SeverityKey> row;
  for (const TrustAssumption& a : m.assumptions()) {
    if (a.system == s && a.goal == g) row[a.party] = a.severity;
  }
  return row;
}

inline bool oracle_goal_leq(const TrustModel& m, System a, System b, Goal g) {
  auto row_a = oracle_row(m, a, g);
  auto row_b = oracle_row(m, b, g);
  for (const auto& [party, sev] : row_a) {
    auto it = row_b.find(party);
    if (it == row_b.end()) return false;
    if (!oracle_severity_leq(sev, it->second)) return false;
  }
  return true;
}

inline bool oracle_overall_leq(const TrustModel& m, System a, System b) {
  for (Goal g : canonical_goals()) {
    if (!oracle_goal_leq(m, a, b, g)) return false;
  }
  return true;
}

// Frontier classes: group systems by mutual goal-leq, then drop classes some
// other class strictly dominates. Classes and members in canonical order.
inline std::vector<std::vector<System>> oracle_frontier(const TrustModel& m,
                                                        Goal g) {
  std::vector<System> systems(m.systems().begin(), m.systems().end());
  std::vector<std::vector<System>> classes;
  std::set<System> assigned;
  for (System s : systems) {
    if (assigned.contains(s)) continue;
    std::vector<System> cls{s};
    assigned.insert(s);
    for (System t : systems) {
      if (assigned.contains(t)) continue;
      if (oracle_goal_leq(m, s, t, g) && oracle_goal_leq(m, t, s, g)) {
        cls.push_back(t);
        assigned.insert(t);
      }
    }
    classes.push_back(std::move(cls));
  }

  std::vector<std::vector<System>> frontier;
  for (const auto& cls : classes) {
    bool dominated = false;
    for (const auto& other : classes) {
      if (&other == &cls) continue;
      if (oracle_goal_leq(m, other.front(), cls.front(), g) &&
          !oracle_goal_leq(m, cls.front(), other.front(), g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) frontier.push_back(cls);
  }
  return frontier;
}

// Independent environment gating: an assumption is dropped iff it has at
// least one note with a voiding condition and all such conditions hold.
inline std::vector<TrustAssumption> oracle_effective(const TrustModel& m,
                                                     System s, Goal g,
                                                     const ScenarioEnv& env) {
  std::vector<TrustAssumption> out;
  for (const TrustAssumption& a : m.assumptions()) {
    if (a.system != s || a.goal != g) continue;
    int conditional_notes = 0;
    int voided_notes = 0;
    for (int id : a.notes) {
      const ConditionNote* note = m.find_note(id);
      if (note && note->voided_when) {
        ++conditional_notes;
        if (env.value(*note->voided_when)) ++voided_notes;
      }
    }
    if (conditional_notes > 0 && conditional_notes == voided_notes) continue;
    out.push_back(a);
  }
  return out;
}

inline std::optional<Impact> oracle_breach_level(const TrustModel& m, System s,
                                                 Goal g,
                                                 const std::set<Party>& bad,
                                                 const ScenarioEnv& env) {
  std::optional<Impact> level;
  for (const TrustAssumption& a : oracle_effective(m, s, g, env)) {
    if (!bad.contains(a.party)) continue;
    if (!level || impact_rank(a.severity.impact) > impact_rank(*level)) {
      level = a.severity.impact;
    }
  }
  return level;
}

// Second exhaustive enumerator: collect all achieving subsets first, then
// keep those with no achieving strict subset.
inline std::vector<Coalition> oracle_minimal_coalitions(
    const TrustModel& m, System s, Goal g, Impact target,
    const ScenarioEnv& env) {
  const std::vector<TrustAssumption> effective = oracle_effective(m, s, g, env);
  std::vector<std::set<Party>> achieving;
  const auto parties = canonical_parties();
  for (unsigned mask = 0; mask < (1u << kPartyCount); ++mask) {
    std::set<Party> subset;
    for (std::size_t i = 0; i < kPartyCount; ++i) {
      if (mask & (1u << i)) subset.insert(parties[i]);
    }
    std::optional<Impact> level;
    for (const TrustAssumption& a : effective) {
      if (!subset.contains(a.party)) continue;
      if (!level || impact_rank(a.severity.impact) > impact_rank(*level)) {
        level = a.severity.impact;
      }
    }
    if (level && impact_rank(*level) >= impact_rank(target)) {
      achieving.push_back(std::move(subset));
    }
  }

  std::vector<Coalition> minimal;
  for (const auto& candidate : achieving) {
    bool has_smaller = false;
    for (const auto& other : achieving) {
      if (other.size() < candidate.size() &&
          std::includes(candidate.begin(), candidate.end(), other.begin(),
                        other.end())) {
        has_smaller = true;
        break;
      }
    }
    if (has_smaller) continue;
    Coalition c;
    c.parties.assign(candidate.begin(), candidate.end());
    minimal.push_back(std::move(c));
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Coalition& a, const Coalition& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(
                  a.parties.begin(), a.parties.end(), b.parties.begin(),
                  b.parties.end(), [](Party x, Party y) {
                    return index_of(x) < index_of(y);
                  });
            });
  return minimal;
}

}  // namespace vtm::testing
