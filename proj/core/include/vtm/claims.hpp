#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vtm/diagnostics.hpp"
#include "vtm/model.hpp"

namespace vtm {

// Predicates a claim can assert about one (system, goal) of a model.
// *_among_systems compare against every system in the model (weak max/min:
// ties allowed).
enum class ClaimPredicate {
  count_equals,
  count_max_among_systems,
  count_min_among_systems,
  level_count_equals,
  level_count_max_among_systems,
  empty_set,
};

std::string_view token(ClaimPredicate p);
std::optional<ClaimPredicate> claim_predicate_from_token(std::string_view t);

// A recorded expectation: the quoted description it came from plus a
// predicate the checker can recompute. `note` carries curation remarks,
// e.g. for expectations known not to match the matrix.
struct Claim {
  std::string id;
  Goal goal{};
  ClaimPredicate predicate{};
  System system{};
  std::optional<long long> expected;  // absent for empty_set
  std::optional<Impact> level;       // present for level_* predicates
  std::string description;
  std::string note;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct ClaimParseResult {
  std::vector<Claim> claims;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

// Line format:
//   claim ID GOAL PREDICATE SYSTEM [LEVEL] [INT] "description"
//         [note "text"] ";"
ClaimParseResult parse_claims(std::string_view text, std::string file_name);

// The claims catalog bundled with the corpus. Throws CorpusError if the
// embedded data does not parse.
std::vector<Claim> builtin_claims();

enum class ClaimStatus { pass, fail, not_evaluable };

struct ClaimOutcome {
  Claim claim;
  std::optional<long long> computed;  // absent when not evaluable
  ClaimStatus status = ClaimStatus::not_evaluable;
  std::string note;  // why it failed / was not evaluable
};

// Covers every claim exactly once, in catalog order.
struct ClaimReport {
  std::vector<ClaimOutcome> outcomes;

  std::size_t failures() const;
  std::size_t not_evaluable() const;
  bool all_pass() const { return failures() == 0 && not_evaluable() == 0; }
};

// Recomputes every claim against the model. Discrepancies are reported, not
// suppressed; claims whose system or goal is missing from the model get
// not_evaluable status.
ClaimReport check_claims(const TrustModel& model, std::span<const Claim> claims);

// check_claims against the bundled catalog.
ClaimReport check_builtin_claims(const TrustModel& model);

}  // namespace vtm
