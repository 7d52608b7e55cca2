#include <doctest.h>

#include <stdexcept>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vtm/analysis.hpp"
#include "vtm/corpus.hpp"

using namespace vtm;

namespace {

const TrustModel& corpus() {
  static const TrustModel model = load_builtin_corpus();
  return model;
}

bool has_obstruction(std::span<const DominanceObstruction> obstructions,
                     Party party) {
  for (const auto& o : obstructions) {
    if (o.party == party) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("assumption_set returns the exact cell sets") {
  CHECK(assumption_set(corpus(), System::paper_voting,
                       Goal::delivery_verification)
            .empty());

  auto bb = assumption_set(corpus(), System::ivoting_individual,
                           Goal::ballot_box_integrity);
  REQUIRE(bb.size() == 4);
  const std::vector<Party> expected = {
      Party::election_organiser, Party::infrastructure_provider,
      Party::election_observer, Party::software_vendor};
  for (std::size_t i = 0; i < bb.size(); ++i) {
    CHECK(bb[i].party == expected[i]);
    CHECK(bb[i].severity == SeverityKey{Impact::all, TrustMode::full});
  }

  CHECK_THROWS_AS(assumption_set(TrustModel{}, System::paper_voting,
                                 Goal::ballot_secrecy),
                  std::invalid_argument);
}

TEST_CASE("profiles count by impact and mode") {
  CriticalityProfile p =
      profile(corpus(), System::crypto_postal_voting,
              Goal::coercion_resistance);
  CHECK(p.total == 8);
  CHECK(p.count(Impact::single) == 1);
  CHECK(p.count(Impact::subset) == 4);
  CHECK(p.count(Impact::all) == 3);
  CHECK(p.count(TrustMode::full) == 7);
  CHECK(p.count(TrustMode::conditional) == 1);

  CriticalityProfile iv =
      profile(corpus(), System::ivoting_individual, Goal::coercion_resistance);
  CHECK(iv.total == 6);
  CHECK(iv.count(Impact::all) == 4);

  CriticalityProfile mnt =
      profile(corpus(), System::machine_voting_no_trail, Goal::tally_integrity);
  CHECK(mnt.total == 5);
  CHECK(mnt.count(Impact::all) == 2);
  CHECK(mnt.count(Impact::subset) == 3);

  // total is always split exactly by impact and by mode
  for (System s : corpus().systems()) {
    for (Goal g : corpus().goals()) {
      CriticalityProfile q = profile(corpus(), s, g);
      CHECK(q.total == q.by_impact[0] + q.by_impact[1] + q.by_impact[2]);
      CHECK(q.total == q.by_mode[0] + q.by_mode[1]);
    }
  }
}

TEST_CASE("dominance relations on corpus rows") {
  DominanceResult d1 = dominance(corpus(), System::paper_voting,
                                 System::crypto_paper_voting,
                                 Goal::delivery_verification);
  CHECK(d1.relation == DominanceRelation::strictly_dominates);
  CHECK(d1.a_not_leq_b.empty());
  CHECK(!d1.b_not_leq_a.empty());

  DominanceResult d2 =
      dominance(corpus(), System::ivoting_individual, System::ivoting_universal,
                Goal::ballot_secrecy);
  CHECK(d2.relation == DominanceRelation::equal);
  CHECK(d2.a_not_leq_b.empty());
  CHECK(d2.b_not_leq_a.empty());

  DominanceResult d3 = dominance(corpus(), System::paper_voting,
                                 System::ivoting_individual,
                                 Goal::ballot_secrecy);
  CHECK(d3.relation == DominanceRelation::incomparable);
  CHECK(has_obstruction(d3.a_not_leq_b, Party::polling_station_official));
  CHECK(has_obstruction(d3.b_not_leq_a, Party::software_vendor));

  DominanceResult d4 = dominance(corpus(), System::crypto_paper_voting,
                                 System::paper_voting,
                                 Goal::delivery_verification);
  CHECK(d4.relation == DominanceRelation::strictly_dominated_by);

  CHECK_THROWS_AS(dominance(TrustModel{}, System::paper_voting,
                            System::postal_voting, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("frontier matches the brute-force oracle on every corpus goal") {
  for (Goal g : corpus().goals()) {
    CAPTURE(token(g));
    CHECK(pareto_frontier(corpus(), g) == testing::oracle_frontier(corpus(), g));
  }

  auto delivery = pareto_frontier(corpus(), Goal::delivery_verification);
  REQUIRE(delivery.size() == 1);
  CHECK(delivery.front() == std::vector<System>{System::paper_voting});

  auto secrecy = pareto_frontier(corpus(), Goal::ballot_secrecy);
  bool paper_on_frontier = false;
  for (const auto& cls : secrecy) {
    for (System s : cls) {
      if (s == System::paper_voting) paper_on_frontier = true;
    }
  }
  CHECK(paper_on_frontier);
}

TEST_CASE("frontier of a single-system model is that class") {
  ModelData data;
  data.systems = {System::postal_voting};
  data.goals = {Goal::ballot_secrecy};
  ParseResult r = TrustModel::create(std::move(data));
  REQUIRE(r.ok());
  auto classes = pareto_frontier(*r.model, Goal::ballot_secrecy);
  REQUIRE(classes.size() == 1);
  CHECK(classes.front() == std::vector<System>{System::postal_voting});
}

TEST_CASE("scores use exact rational arithmetic") {
  WeightConfig defaults = WeightConfig::defaults();

  CHECK(score(corpus(), System::ivoting_individual,
              Goal::ballot_box_integrity, defaults) == Rational(64));
  CHECK(score(corpus(), System::paper_voting, Goal::delivery_verification,
              defaults) == Rational(0));
  CHECK(score(corpus(), System::ivoting_individual,
              Goal::equal_and_universal_suffrage, defaults) ==
        Rational(123, 2));

  // Doubling the impact weights doubles every score.
  WeightConfig doubled = defaults;
  doubled.w_single = defaults.w_single * Rational(2);
  doubled.w_subset = defaults.w_subset * Rational(2);
  doubled.w_all = defaults.w_all * Rational(2);
  for (System s : corpus().systems()) {
    CHECK(score(corpus(), s, std::nullopt, doubled) ==
          score(corpus(), s, std::nullopt, defaults) * Rational(2));
  }

  WeightConfig bad;
  bad.w_single = Rational(5);
  bad.w_subset = Rational(1);
  CHECK(!bad.admissible());
  CHECK_THROWS_AS(score(corpus(), System::paper_voting, std::nullopt, bad),
                  std::invalid_argument);
  WeightConfig zero_factor;
  zero_factor.conditional_factor = Rational(0);
  CHECK(!zero_factor.admissible());
}

TEST_CASE("rank orders ascending with ties grouped") {
  auto entries = rank(corpus(), Goal::delivery_verification,
                      WeightConfig::defaults());
  REQUIRE(entries.size() == 8);
  CHECK(entries.front().system == System::paper_voting);
  CHECK(entries.front().score == Rational(0));
  for (std::size_t i = 1; i < entries.size(); ++i) {
    CHECK(!(entries[i].score < entries[i - 1].score));
    if (entries[i].score == entries[i - 1].score) {
      CHECK(entries[i].tie_group == entries[i - 1].tie_group);
    } else {
      CHECK(entries[i].tie_group == entries[i - 1].tie_group + 1);
    }
  }

  // A permutation of the model's systems.
  std::set<System> seen;
  for (const auto& e : entries) seen.insert(e.system);
  CHECK(seen.size() == 8);

  // i-voting is last for equal & universal suffrage, both variants tied.
  auto suffrage = rank(corpus(), Goal::equal_and_universal_suffrage,
                       WeightConfig::defaults());
  REQUIRE(suffrage.size() == 8);
  CHECK(suffrage[6].system == System::ivoting_individual);
  CHECK(suffrage[7].system == System::ivoting_universal);
  CHECK(suffrage[6].tie_group == suffrage[7].tie_group);

  // An all-equal model collapses to one tie group.
  ModelData data;
  data.systems = {System::paper_voting, System::postal_voting};
  data.goals = {Goal::ballot_secrecy};
  ParseResult r = TrustModel::create(std::move(data));
  REQUIRE(r.ok());
  auto tied = rank(*r.model, std::nullopt, WeightConfig::defaults());
  REQUIRE(tied.size() == 2);
  CHECK(tied[0].tie_group == tied[1].tie_group);
}

TEST_CASE("goal matrix mirrors the cell data") {
  GoalMatrix m = goal_matrix(corpus(), Goal::ballot_secrecy);
  REQUIRE(m.systems.size() == 8);
  int filled_paper = 0;
  for (const auto& cell : m.rows[0]) {
    if (cell) ++filled_paper;
  }
  CHECK(filled_paper == 4);

  for (std::size_t i = 0; i < m.systems.size(); ++i) {
    CriticalityProfile p = profile(corpus(), m.systems[i], m.goal);
    int filled = 0;
    for (const auto& cell : m.rows[i]) {
      if (cell) ++filled;
    }
    CHECK(filled == p.total);
  }

  GoalMatrix tally = goal_matrix(corpus(), Goal::tally_integrity);
  const auto& crypto_postal_row = tally.rows[3];
  int filled = 0;
  for (const auto& cell : crypto_postal_row) {
    if (cell) ++filled;
  }
  CHECK(filled == 1);
  CHECK(crypto_postal_row[index_of(Party::election_observer)].has_value());
}

TEST_CASE("score is monotone along dominance on random models") {
  testing::Gen gen(99);
  for (int round = 0; round < 60; ++round) {
    TrustModel m = gen.model();
    WeightConfig w = gen.admissible_weights();
    for (System a : m.systems()) {
      for (System b : m.systems()) {
        for (Goal g : m.goals()) {
          if (testing::oracle_goal_leq(m, a, b, g)) {
            CHECK(!(score(m, b, g, w) < score(m, a, g, w)));
          }
        }
      }
    }
  }
}
