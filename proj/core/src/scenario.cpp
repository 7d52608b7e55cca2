#include "vtm/scenario.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "lexer.hpp"

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

using PartyMask = std::uint16_t;  // bit i = canonical party i

Coalition coalition_of(PartyMask mask) {
  Coalition c;
  for (Party p : canonical_parties()) {
    if (mask & (PartyMask(1) << index_of(p))) c.parties.push_back(p);
  }
  return c;
}

}  // namespace

bool Coalition::contains(Party p) const {
  return std::binary_search(parties.begin(), parties.end(), p,
                            [](Party a, Party b) {
                              return index_of(a) < index_of(b);
                            });
}

Coalition Coalition::of(std::initializer_list<Party> ps) {
  Coalition c;
  c.parties.assign(ps);
  std::sort(c.parties.begin(), c.parties.end(),
            [](Party a, Party b) { return index_of(a) < index_of(b); });
  c.parties.erase(std::unique(c.parties.begin(), c.parties.end()),
                  c.parties.end());
  return c;
}

std::vector<TrustAssumption> effective_assumptions(const TrustModel& model,
                                                   System system, Goal goal,
                                                   const ScenarioEnv& env) {
  require_system(model, system);
  require_goal(model, goal);

  std::vector<TrustAssumption> out;
  for (const TrustAssumption& a : model.assumptions(system, goal)) {
    bool has_conditional_note = false;
    bool all_voided = true;
    for (int id : a.notes) {
      const ConditionNote* note = model.find_note(id);
      if (!note || !note->voided_when) continue;
      has_conditional_note = true;
      if (!env.value(*note->voided_when)) all_voided = false;
    }
    if (has_conditional_note && all_voided) continue;
    out.push_back(a);
  }
  return out;
}

BreachFinding breach(const TrustModel& model, System system, Goal goal,
                     const Coalition& coalition, const ScenarioEnv& env) {
  BreachFinding finding;
  for (TrustAssumption& a : effective_assumptions(model, system, goal, env)) {
    if (!coalition.contains(a.party)) continue;
    if (!finding.level ||
        impact_rank(a.severity.impact) > impact_rank(*finding.level)) {
      finding.level = a.severity.impact;
    }
    finding.triggered.push_back(std::move(a));
  }
  return finding;
}

BreachReport breach_report(const TrustModel& model, const Coalition& coalition,
                           const ScenarioEnv& env,
                           std::optional<System> only_system) {
  if (only_system) require_system(model, *only_system);
  BreachReport report;
  report.coalition = coalition;
  report.env = env;
  for (System s : model.systems()) {
    if (only_system && s != *only_system) continue;
    for (Goal g : model.goals()) {
      report.entries.push_back({s, g, breach(model, s, g, coalition, env)});
    }
  }
  return report;
}

std::vector<Coalition> minimal_coalitions(const TrustModel& model,
                                          System system, Goal goal,
                                          Impact target,
                                          const ScenarioEnv& env) {
  const std::vector<TrustAssumption> effective =
      effective_assumptions(model, system, goal, env);

  // A subset reaches the target iff it contains a party whose effective
  // assumption has impact >= target.
  auto reaches = [&](PartyMask mask) {
    for (const TrustAssumption& a : effective) {
      if ((mask & (PartyMask(1) << index_of(a.party))) &&
          impact_rank(a.severity.impact) >= impact_rank(target)) {
        return true;
      }
    }
    return false;
  };

  // Exhaustive scan of all 2^12 subsets, ascending by size so minimality is
  // a subset check against already-kept coalitions.
  std::vector<PartyMask> subsets;
  subsets.reserve(std::size_t(1) << kPartyCount);
  for (PartyMask m = 0;; ++m) {
    subsets.push_back(m);
    if (m == PartyMask((std::size_t(1) << kPartyCount) - 1)) break;
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](PartyMask a, PartyMask b) {
                     return std::popcount(a) < std::popcount(b);
                   });

  std::vector<PartyMask> kept;
  for (PartyMask m : subsets) {
    if (!reaches(m)) continue;
    bool superset_of_kept = std::any_of(
        kept.begin(), kept.end(), [&](PartyMask k) { return (m & k) == k; });
    if (!superset_of_kept) kept.push_back(m);
  }

  std::vector<Coalition> out;
  out.reserve(kept.size());
  for (PartyMask m : kept) out.push_back(coalition_of(m));
  std::sort(out.begin(), out.end(),
            [](const Coalition& a, const Coalition& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(
                  a.parties.begin(), a.parties.end(), b.parties.begin(),
                  b.parties.end(), [](Party x, Party y) {
                    return index_of(x) < index_of(y);
                  });
            });
  return out;
}

std::vector<ResilienceEntry> system_resilience(const TrustModel& model,
                                               System system,
                                               const ScenarioEnv& env) {
  require_system(model, system);
  std::vector<ResilienceEntry> entries;
  for (Goal g : model.goals()) {
    ResilienceEntry entry;
    entry.goal = g;
    for (Impact level : all_impacts()) {
      auto coalitions = minimal_coalitions(model, system, g, level, env);
      if (!coalitions.empty()) {
        entry.min_coalition_size[impact_rank(level) - 1] =
            coalitions.front().size();
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

WhatIfRemoveResult whatif_remove(const TrustModel& model,
                                 std::span<const CellRef> selectors,
                                 const WeightConfig& weights) {
  for (const CellRef& ref : selectors) {
    if (!model.find(ref.system, ref.goal, ref.party)) {
      throw std::invalid_argument(
          "no such cell (" + std::string(token(ref.system)) + ", " +
          std::string(token(ref.goal)) + ", " + std::string(token(ref.party)) +
          ")");
    }
  }

  // Deduplicated selectors in canonical order drive the report.
  std::vector<CellRef> removed(selectors.begin(), selectors.end());
  auto ref_less = [](const CellRef& a, const CellRef& b) {
    return std::tuple{index_of(a.system), index_of(a.goal), index_of(a.party)} <
           std::tuple{index_of(b.system), index_of(b.goal), index_of(b.party)};
  };
  std::sort(removed.begin(), removed.end(), ref_less);
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

  ModelData data = model.data();
  std::erase_if(data.assumptions, [&](const TrustAssumption& a) {
    return std::binary_search(removed.begin(), removed.end(),
                              CellRef{a.system, a.goal, a.party}, ref_less);
  });
  ParseResult created = TrustModel::create(std::move(data), "<whatif>");
  if (!created.ok()) {
    // Removal cannot break validity of a validated model.
    throw std::logic_error("internal error: removal produced invalid model");
  }

  WhatIfRemoveResult result{std::move(*created.model), {}};
  result.delta.removed = removed;

  std::set<std::pair<std::size_t, std::size_t>> pairs_seen;
  std::set<std::size_t> goals_seen;
  for (const CellRef& ref : removed) {
    if (pairs_seen.insert({index_of(ref.system), index_of(ref.goal)}).second) {
      result.delta.profiles.push_back(
          {ref.system, ref.goal, profile(model, ref.system, ref.goal),
           profile(result.model, ref.system, ref.goal)});
    }
    goals_seen.insert(index_of(ref.goal));
  }
  for (Goal g : canonical_goals()) {
    if (!goals_seen.contains(index_of(g))) continue;
    result.delta.ranks.push_back(
        {g, rank(model, g, weights), rank(result.model, g, weights)});
  }
  return result;
}

ScenarioParseResult parse_scenario(std::string_view text,
                                   std::string file_name) {
  using detail::Lexer;
  using detail::TokKind;
  using detail::Token;

  ScenarioParseResult result;
  Lexer lexer(text, std::move(file_name), result.diagnostics);

  auto error = [&](std::string msg, SourceSpan span) {
    result.diagnostics.push_back(
        {DiagnosticSeverity::error, std::move(msg), std::move(span)});
  };
  auto warning = [&](std::string msg, SourceSpan span) {
    result.diagnostics.push_back(
        {DiagnosticSeverity::warning, std::move(msg), std::move(span)});
  };
  auto skip_past_semicolon = [&] {
    for (;;) {
      const Token& t = lexer.peek();
      if (t.kind == TokKind::end) return;
      if (t.kind == TokKind::semicolon) {
        lexer.next();
        return;
      }
      lexer.next();
    }
  };

  Scenario scenario;
  std::set<Party> corrupted;
  std::set<Condition> conditions_set;

  for (;;) {
    const Token head = lexer.next();
    if (head.kind == TokKind::end) break;
    if (head.kind == TokKind::ident && head.text == "corrupt") {
      const Token p = lexer.next();
      auto party =
          p.kind == TokKind::ident ? party_from_token(p.text) : std::nullopt;
      if (!party) {
        error("unknown party token '" + p.text + "'", p.span);
        skip_past_semicolon();
        continue;
      }
      if (lexer.peek().kind != TokKind::semicolon) {
        error("expected ';'", lexer.peek().span);
        skip_past_semicolon();
        continue;
      }
      lexer.next();
      corrupted.insert(*party);
    } else if (head.kind == TokKind::ident && head.text == "set") {
      const Token c = lexer.next();
      auto condition = c.kind == TokKind::ident
                           ? condition_from_token(c.text)
                           : std::nullopt;
      if (!condition) {
        error("unknown condition token '" + c.text + "'", c.span);
        skip_past_semicolon();
        continue;
      }
      if (lexer.peek().kind != TokKind::equals) {
        error("expected '='", lexer.peek().span);
        skip_past_semicolon();
        continue;
      }
      lexer.next();
      const Token v = lexer.next();
      bool value = false;
      if (v.kind == TokKind::ident && v.text == "true") {
        value = true;
      } else if (v.kind == TokKind::ident && v.text == "false") {
        value = false;
      } else {
        error("expected 'true' or 'false'", v.span);
        skip_past_semicolon();
        continue;
      }
      if (lexer.peek().kind != TokKind::semicolon) {
        error("expected ';'", lexer.peek().span);
        skip_past_semicolon();
        continue;
      }
      lexer.next();
      if (!conditions_set.insert(*condition).second) {
        warning("condition '" + std::string(token(*condition)) +
                    "' set more than once; last value wins",
                c.span);
      }
      scenario.env.set(*condition, value);
    } else {
      error("expected 'corrupt' or 'set'", head.span);
      skip_past_semicolon();
    }
  }

  if (has_errors(result.diagnostics)) return result;
  scenario.coalition.parties.assign(corrupted.begin(), corrupted.end());
  std::sort(scenario.coalition.parties.begin(),
            scenario.coalition.parties.end(),
            [](Party a, Party b) { return index_of(a) < index_of(b); });
  result.scenario = std::move(scenario);
  return result;
}

}  // namespace vtm
