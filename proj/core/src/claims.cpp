#include "vtm/claims.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "vtm/corpus.hpp"

namespace vtm {

namespace {

using detail::Lexer;
using detail::TokKind;
using detail::Token;

bool needs_level(ClaimPredicate p) {
  return p == ClaimPredicate::level_count_equals ||
         p == ClaimPredicate::level_count_max_among_systems;
}

bool needs_expected(ClaimPredicate p) { return p != ClaimPredicate::empty_set; }

long long count_total(const TrustModel& m, System s, Goal g) {
  return static_cast<long long>(m.assumptions(s, g).size());
}

long long count_at_level(const TrustModel& m, System s, Goal g, Impact level) {
  auto cells = m.assumptions(s, g);
  return std::count_if(cells.begin(), cells.end(),
                       [&](const TrustAssumption& a) {
                         return a.severity.impact == level;
                       });
}

}  // namespace

std::string_view token(ClaimPredicate p) {
  switch (p) {
    case ClaimPredicate::count_equals: return "count_equals";
    case ClaimPredicate::count_max_among_systems:
      return "count_max_among_systems";
    case ClaimPredicate::count_min_among_systems:
      return "count_min_among_systems";
    case ClaimPredicate::level_count_equals: return "level_count_equals";
    case ClaimPredicate::level_count_max_among_systems:
      return "level_count_max_among_systems";
    case ClaimPredicate::empty_set: return "empty_set";
  }
  return "?";
}

std::optional<ClaimPredicate> claim_predicate_from_token(std::string_view t) {
  for (ClaimPredicate p :
       {ClaimPredicate::count_equals, ClaimPredicate::count_max_among_systems,
        ClaimPredicate::count_min_among_systems,
        ClaimPredicate::level_count_equals,
        ClaimPredicate::level_count_max_among_systems,
        ClaimPredicate::empty_set}) {
    if (token(p) == t) return p;
  }
  return std::nullopt;
}

ClaimParseResult parse_claims(std::string_view text, std::string file_name) {
  ClaimParseResult result;
  Lexer lexer(text, std::move(file_name), result.diagnostics);

  auto error = [&](std::string msg, SourceSpan span) {
    result.diagnostics.push_back(
        {DiagnosticSeverity::error, std::move(msg), std::move(span)});
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

  std::set<std::string> seen_ids;

  for (;;) {
    const Token head = lexer.next();
    if (head.kind == TokKind::end) break;
    if (!(head.kind == TokKind::ident && head.text == "claim")) {
      error("expected 'claim'", head.span);
      skip_past_semicolon();
      continue;
    }

    Claim claim;
    const Token id = lexer.next();
    if (id.kind != TokKind::ident) {
      error("expected claim identifier", id.span);
      skip_past_semicolon();
      continue;
    }
    claim.id = id.text;
    if (!seen_ids.insert(claim.id).second) {
      error("duplicate claim id '" + claim.id + "'", id.span);
      skip_past_semicolon();
      continue;
    }

    const Token goal_tok = lexer.next();
    auto goal = goal_tok.kind == TokKind::ident
                    ? goal_from_token(goal_tok.text)
                    : std::nullopt;
    if (!goal) {
      error("unknown goal token '" + goal_tok.text + "'", goal_tok.span);
      skip_past_semicolon();
      continue;
    }
    claim.goal = *goal;

    const Token pred_tok = lexer.next();
    auto predicate = pred_tok.kind == TokKind::ident
                         ? claim_predicate_from_token(pred_tok.text)
                         : std::nullopt;
    if (!predicate) {
      error("unknown claim predicate '" + pred_tok.text + "'", pred_tok.span);
      skip_past_semicolon();
      continue;
    }
    claim.predicate = *predicate;

    const Token sys_tok = lexer.next();
    auto system = sys_tok.kind == TokKind::ident
                      ? system_from_token(sys_tok.text)
                      : std::nullopt;
    if (!system) {
      error("unknown system token '" + sys_tok.text + "'", sys_tok.span);
      skip_past_semicolon();
      continue;
    }
    claim.system = *system;

    if (needs_level(claim.predicate)) {
      const Token level_tok = lexer.next();
      auto level = level_tok.kind == TokKind::ident
                       ? impact_from_token(level_tok.text)
                       : std::nullopt;
      if (!level) {
        error("unknown impact token '" + level_tok.text + "'", level_tok.span);
        skip_past_semicolon();
        continue;
      }
      claim.level = *level;
    }

    if (needs_expected(claim.predicate)) {
      const Token n = lexer.next();
      if (n.kind != TokKind::integer || n.value < 0) {
        error("expected non-negative expected count", n.span);
        skip_past_semicolon();
        continue;
      }
      claim.expected = n.value;
    }

    const Token desc = lexer.next();
    if (desc.kind != TokKind::string) {
      error("expected quoted claim description", desc.span);
      skip_past_semicolon();
      continue;
    }
    claim.description = desc.text;

    if (lexer.peek().kind == TokKind::ident && lexer.peek().text == "note") {
      lexer.next();
      const Token note = lexer.next();
      if (note.kind != TokKind::string) {
        error("expected quoted note text", note.span);
        skip_past_semicolon();
        continue;
      }
      claim.note = note.text;
    }

    const Token semi = lexer.next();
    if (semi.kind != TokKind::semicolon) {
      error("expected ';'", semi.span);
      skip_past_semicolon();
      continue;
    }

    result.claims.push_back(std::move(claim));
  }

  return result;
}

std::vector<Claim> builtin_claims() {
  ClaimParseResult parsed =
      parse_claims(builtin_claims_text(), "corpus/claims.vtm");
  if (!parsed.ok()) {
    throw CorpusError("bundled claims catalog is corrupted:\n" +
                      render_diagnostics(parsed.diagnostics));
  }
  return std::move(parsed.claims);
}

std::size_t ClaimReport::failures() const {
  return std::count_if(outcomes.begin(), outcomes.end(),
                       [](const ClaimOutcome& o) {
                         return o.status == ClaimStatus::fail;
                       });
}

std::size_t ClaimReport::not_evaluable() const {
  return std::count_if(outcomes.begin(), outcomes.end(),
                       [](const ClaimOutcome& o) {
                         return o.status == ClaimStatus::not_evaluable;
                       });
}

ClaimReport check_claims(const TrustModel& model,
                         std::span<const Claim> claims) {
  ClaimReport report;
  report.outcomes.reserve(claims.size());

  for (const Claim& claim : claims) {
    ClaimOutcome outcome;
    outcome.claim = claim;

    if (!model.has_system(claim.system)) {
      outcome.status = ClaimStatus::not_evaluable;
      outcome.note = "system '" + std::string(token(claim.system)) +
                     "' is not in the model";
      report.outcomes.push_back(std::move(outcome));
      continue;
    }
    if (!model.has_goal(claim.goal)) {
      outcome.status = ClaimStatus::not_evaluable;
      outcome.note =
          "goal '" + std::string(token(claim.goal)) + "' is not in the model";
      report.outcomes.push_back(std::move(outcome));
      continue;
    }

    auto value_of = [&](System s) {
      return claim.level ? count_at_level(model, s, claim.goal, *claim.level)
                         : count_total(model, s, claim.goal);
    };
    const long long computed = value_of(claim.system);
    outcome.computed = computed;

    bool pass = false;
    std::string fail_note;
    switch (claim.predicate) {
      case ClaimPredicate::count_equals:
      case ClaimPredicate::level_count_equals:
        pass = computed == *claim.expected;
        break;
      case ClaimPredicate::count_max_among_systems:
      case ClaimPredicate::level_count_max_among_systems: {
        pass = computed == *claim.expected;
        for (System s : model.systems()) {
          if (s == claim.system) continue;
          long long other = value_of(s);
          if (other > computed) {
            pass = false;
            fail_note = "system '" + std::string(token(s)) +
                        "' has a larger value (" + std::to_string(other) + ")";
          }
        }
        break;
      }
      case ClaimPredicate::count_min_among_systems: {
        pass = computed == *claim.expected;
        for (System s : model.systems()) {
          if (s == claim.system) continue;
          long long other = value_of(s);
          if (other < computed) {
            pass = false;
            fail_note = "system '" + std::string(token(s)) +
                        "' has a smaller value (" + std::to_string(other) +
                        ")";
          }
        }
        break;
      }
      case ClaimPredicate::empty_set:
        pass = computed == 0;
        break;
    }

    outcome.status = pass ? ClaimStatus::pass : ClaimStatus::fail;
    if (!pass) {
      std::ostringstream os;
      if (!claim.note.empty()) {
        os << claim.note;
      } else {
        os << "computed " << computed;
        if (claim.expected) os << ", expected " << *claim.expected;
        if (!fail_note.empty()) os << "; " << fail_note;
      }
      outcome.note = os.str();
    }
    report.outcomes.push_back(std::move(outcome));
  }

  return report;
}

ClaimReport check_builtin_claims(const TrustModel& model) {
  std::vector<Claim> catalog = builtin_claims();
  return check_claims(model, catalog);
}

}  // namespace vtm
