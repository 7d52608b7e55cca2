#include <doctest.h>

#include <set>
#include <stdexcept>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vtm/corpus.hpp"
#include "vtm/scenario.hpp"

using namespace vtm;

namespace {

const TrustModel& corpus() {
  static const TrustModel model = load_builtin_corpus();
  return model;
}

std::set<Party> parties_of(const std::vector<TrustAssumption>& as) {
  std::set<Party> out;
  for (const auto& a : as) out.insert(a.party);
  return out;
}

}  // namespace

TEST_CASE("environment defaults") {
  ScenarioEnv env = ScenarioEnv::defaults();
  CHECK(env.value(Condition::reliable_ids_available));
  CHECK(!env.value(Condition::code_voting_in_use));
  CHECK(!env.value(Condition::print_on_demand));
}

TEST_CASE("code voting removes the note-5 cells from i-voting secrecy") {
  ScenarioEnv env = ScenarioEnv::defaults();
  env.set(Condition::code_voting_in_use, true);
  auto effective = effective_assumptions(corpus(), System::ivoting_individual,
                                         Goal::ballot_secrecy, env);
  CHECK(effective.size() == 3);
  CHECK(parties_of(effective) ==
        std::set<Party>{Party::voter, Party::election_organiser,
                        Party::election_observer});
}

TEST_CASE("default environment keeps rows without conditional notes intact") {
  auto effective = effective_assumptions(
      corpus(), System::paper_voting, Goal::ballot_secrecy,
      ScenarioEnv::defaults());
  auto raw = corpus().assumptions(System::paper_voting, Goal::ballot_secrecy);
  REQUIRE(effective.size() == raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) CHECK(effective[i] == raw[i]);
}

TEST_CASE("reliable ids void the note-3 voter cell") {
  ScenarioEnv env = ScenarioEnv::defaults();
  REQUIRE(env.value(Condition::reliable_ids_available));
  auto effective = effective_assumptions(
      corpus(), System::paper_voting, Goal::eligibility_verification, env);
  CHECK(effective.size() == 2);
  CHECK(!parties_of(effective).contains(Party::voter));

  env.set(Condition::reliable_ids_available, false);
  auto with_voter = effective_assumptions(
      corpus(), System::paper_voting, Goal::eligibility_verification, env);
  CHECK(with_voter.size() == 3);
  CHECK(parties_of(with_voter).contains(Party::voter));
}

TEST_CASE("breach levels") {
  ScenarioEnv env = ScenarioEnv::defaults();

  BreachFinding none = breach(corpus(), System::paper_voting,
                              Goal::ballot_secrecy, Coalition{}, env);
  CHECK(!none.level.has_value());
  CHECK(none.triggered.empty());

  BreachFinding postal =
      breach(corpus(), System::postal_voting, Goal::delivery_verification,
             Coalition::of({Party::postal_service}), env);
  CHECK(postal.level == Impact::subset);
  REQUIRE(postal.triggered.size() == 1);
  CHECK(postal.triggered.front().party == Party::postal_service);

  BreachFinding sv =
      breach(corpus(), System::ivoting_individual, Goal::tally_integrity,
             Coalition::of({Party::software_vendor}), env);
  CHECK(sv.level == Impact::all);
}

TEST_CASE("breach report covers every (system, goal) pair") {
  BreachReport report = breach_report(
      corpus(), Coalition::of({Party::software_vendor}),
      ScenarioEnv::defaults());
  CHECK(report.entries.size() == 56);
  BreachReport one = breach_report(corpus(),
                                   Coalition::of({Party::software_vendor}),
                                   ScenarioEnv::defaults(),
                                   System::ivoting_individual);
  CHECK(one.entries.size() == 7);
  for (const auto& e : one.entries) {
    CHECK(e.system == System::ivoting_individual);
    CHECK(e.finding.level == Impact::all);
  }
}

TEST_CASE("minimal coalitions on corpus rows") {
  ScenarioEnv env = ScenarioEnv::defaults();

  auto bb = minimal_coalitions(corpus(), System::ivoting_individual,
                               Goal::ballot_box_integrity, Impact::all, env);
  REQUIRE(bb.size() == 4);
  CHECK(bb[0] == Coalition::of({Party::election_organiser}));
  CHECK(bb[1] == Coalition::of({Party::infrastructure_provider}));
  CHECK(bb[2] == Coalition::of({Party::election_observer}));
  CHECK(bb[3] == Coalition::of({Party::software_vendor}));

  CHECK(minimal_coalitions(corpus(), System::paper_voting,
                           Goal::ballot_secrecy, Impact::all, env)
            .empty());
}

TEST_CASE("minimal coalitions form an antichain of just-breaking sets") {
  ScenarioEnv env = ScenarioEnv::defaults();
  for (System s : {System::postal_voting, System::ivoting_universal}) {
    for (Goal g : corpus().goals()) {
      for (Impact level : all_impacts()) {
        auto coalitions = minimal_coalitions(corpus(), s, g, level, env);
        for (std::size_t i = 0; i < coalitions.size(); ++i) {
          // breaches at >= target
          auto reached = breach(corpus(), s, g, coalitions[i], env).level;
          REQUIRE(reached.has_value());
          CHECK(impact_rank(*reached) >= impact_rank(level));
          // every strict subset fails to
          const auto& parties = coalitions[i].parties;
          for (std::size_t drop = 0; drop < parties.size(); ++drop) {
            Coalition smaller;
            for (std::size_t k = 0; k < parties.size(); ++k) {
              if (k != drop) smaller.parties.push_back(parties[k]);
            }
            auto sub = breach(corpus(), s, g, smaller, env).level;
            CHECK((!sub || impact_rank(*sub) < impact_rank(level)));
          }
          // no returned coalition is a superset of another
          for (std::size_t j = 0; j < coalitions.size(); ++j) {
            if (i == j) continue;
            bool superset = true;
            for (Party p : coalitions[j].parties) {
              if (!coalitions[i].contains(p)) superset = false;
            }
            CHECK(!superset);
          }
        }
      }
    }
  }
}

TEST_CASE("minimal coalitions agree with the independent enumerator") {
  // A sample here; the acceptance suite runs the full sweep.
  ScenarioEnv env = ScenarioEnv::defaults();
  for (System s : {System::paper_voting, System::crypto_postal_voting,
                   System::ivoting_individual}) {
    for (Goal g : corpus().goals()) {
      for (Impact level : all_impacts()) {
        CAPTURE(token(s));
        CAPTURE(token(g));
        CAPTURE(token(level));
        CHECK(minimal_coalitions(corpus(), s, g, level, env) ==
              testing::oracle_minimal_coalitions(corpus(), s, g, level, env));
      }
    }
  }
}

TEST_CASE("resilience summarises minimal coalition sizes") {
  ScenarioEnv env = ScenarioEnv::defaults();
  auto entries = system_resilience(corpus(), System::paper_voting, env);
  REQUIRE(entries.size() == 7);
  for (const auto& e : entries) {
    if (e.goal == Goal::delivery_verification) {
      CHECK(!e.at(Impact::single).has_value());
      CHECK(!e.at(Impact::subset).has_value());
      CHECK(!e.at(Impact::all).has_value());
    }
    for (Impact level : all_impacts()) {
      auto coalitions =
          minimal_coalitions(corpus(), System::paper_voting, e.goal, level, env);
      if (coalitions.empty()) {
        CHECK(!e.at(level).has_value());
      } else {
        CHECK(e.at(level) == coalitions.front().size());
      }
    }
  }

  auto crypto_postal =
      system_resilience(corpus(), System::crypto_postal_voting, env);
  for (const auto& e : crypto_postal) {
    if (e.goal == Goal::coercion_resistance) {
      CHECK(e.at(Impact::all) == std::size_t{1});
    }
  }
}

TEST_CASE("whatif_remove reports deltas without touching the input") {
  auto unchanged = whatif_remove(corpus(), {});
  CHECK(unchanged.delta.empty());
  CHECK(unchanged.model == corpus());

  const std::vector<CellRef> refs = {{System::ivoting_individual,
                                      Goal::ballot_box_integrity,
                                      Party::software_vendor}};
  auto result = whatif_remove(corpus(), refs);
  CHECK(corpus().assumption_count() == 208);  // original untouched
  CHECK(result.model.assumption_count() == 207);
  REQUIRE(result.delta.profiles.size() == 1);
  CHECK(result.delta.profiles.front().before.count(Impact::all) == 4);
  CHECK(result.delta.profiles.front().after.count(Impact::all) == 3);
  REQUIRE(result.delta.ranks.size() == 1);
  CHECK(result.delta.ranks.front().goal == Goal::ballot_box_integrity);

  const std::vector<CellRef> missing = {
      {System::paper_voting, Goal::delivery_verification, Party::voter}};
  CHECK_THROWS_AS(whatif_remove(corpus(), missing), std::invalid_argument);
}

TEST_CASE("removals never increase scores nor flip a dominance to dominated") {
  testing::Gen gen(5150);
  for (int round = 0; round < 40; ++round) {
    TrustModel m = gen.model();
    if (m.assumption_count() == 0) continue;
    WeightConfig w = gen.admissible_weights();
    const auto& all = m.assumptions();
    const TrustAssumption& pick =
        all[static_cast<std::size_t>(gen.uniform(0, int(all.size()) - 1))];
    const std::vector<CellRef> refs = {{pick.system, pick.goal, pick.party}};
    auto result = whatif_remove(m, refs, w);
    for (System s : m.systems()) {
      CHECK(!(score(m, s, std::nullopt, w) <
              score(result.model, s, std::nullopt, w)));
    }
    // The modified system keeps every dominance it had.
    for (System other : m.systems()) {
      if (other == pick.system) continue;
      for (auto scope : {std::optional<Goal>{pick.goal}, std::optional<Goal>{}}) {
        DominanceRelation before =
            dominance(m, pick.system, other, scope).relation;
        DominanceRelation after =
            dominance(result.model, pick.system, other, scope).relation;
        if (before == DominanceRelation::strictly_dominates ||
            before == DominanceRelation::equal) {
          CHECK((after == DominanceRelation::strictly_dominates ||
                 after == DominanceRelation::equal));
        }
      }
    }
  }
}

TEST_CASE("scenario files parse into coalition and environment") {
  ScenarioParseResult r = parse_scenario(
      "# scenario\n"
      "corrupt software_vendor;\n"
      "corrupt postal_service;\n"
      "corrupt software_vendor;\n"
      "set code_voting_in_use = true;\n",
      "s.vts");
  REQUIRE(r.ok());
  CHECK(r.scenario->coalition ==
        Coalition::of({Party::postal_service, Party::software_vendor}));
  CHECK(r.scenario->env.value(Condition::code_voting_in_use));
  CHECK(r.scenario->env.value(Condition::reliable_ids_available));

  ScenarioParseResult bad = parse_scenario("corrupt nobody;", "s.vts");
  CHECK(!bad.ok());
  CHECK(bad.diagnostics.front().message == "unknown party token 'nobody'");

  ScenarioParseResult dup = parse_scenario(
      "set code_voting_in_use = true;\nset code_voting_in_use = false;\n",
      "s.vts");
  REQUIRE(dup.ok());
  CHECK(!dup.scenario->env.value(Condition::code_voting_in_use));
  REQUIRE(dup.diagnostics.size() == 1);
  CHECK(dup.diagnostics.front().severity == DiagnosticSeverity::warning);
}

TEST_CASE("breach monotonicity in coalition and environment") {
  testing::Gen gen(31337);
  for (int round = 0; round < 200; ++round) {
    System s = canonical_systems()[gen.uniform(0, 7)];
    Goal g = canonical_goals()[gen.uniform(0, 6)];
    ScenarioEnv env = gen.env();
    Coalition small = gen.coalition();
    Coalition big = gen.supercoalition(small);

    auto level_small = breach(corpus(), s, g, small, env).level;
    auto level_big = breach(corpus(), s, g, big, env).level;
    if (level_small) {
      REQUIRE(level_big.has_value());
      CHECK(impact_rank(*level_small) <= impact_rank(*level_big));
    }

    // Voiding more assumptions (flipping more conditions to true) never
    // raises the breach level.
    ScenarioEnv more_voided = env;
    for (Condition c : all_conditions()) {
      if (!more_voided.value(c) && gen.chance(0.5)) more_voided.set(c, true);
    }
    auto level_env = breach(corpus(), s, g, big, env).level;
    auto level_more = breach(corpus(), s, g, big, more_voided).level;
    if (level_more) {
      REQUIRE(level_env.has_value());
      CHECK(impact_rank(*level_more) <= impact_rank(*level_env));
    }
  }
}
