#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vtm/diagnostics.hpp"
#include "vtm/vocabulary.hpp"

namespace vtm {

// A catalogued footnote. Notes with voided_when are the conditional ones: a
// scenario in which the condition holds removes the assumptions carrying the
// note (see effective_assumptions).
struct ConditionNote {
  int id = 0;
  std::string text;
  std::optional<Condition> voided_when;

  friend bool operator==(const ConditionNote&, const ConditionNote&) = default;
};

// One filled cell of the trust matrix.
struct TrustAssumption {
  System system{};
  Goal goal{};
  Party party{};
  SeverityKey severity{};
  std::vector<int> notes;  // sorted, unique
  std::string rationale;

  friend bool operator==(const TrustAssumption&, const TrustAssumption&) =
      default;
};

// Canonical (system, goal, party) key order.
bool cell_key_less(const TrustAssumption& a, const TrustAssumption& b);

// Unvalidated model contents, as produced by a parser or assembled by hand.
struct ModelData {
  std::vector<System> systems;
  std::vector<Goal> goals;
  std::vector<TrustAssumption> assumptions;
  std::vector<ConditionNote> notes;
  std::string provenance;
};

class TrustModel;
struct ParseResult;

// Structural checks on raw model data:
//   - at most one assumption per (system, goal, party)
//   - every assumption's system/goal is declared
//   - every referenced note id is in the catalog
//   - note ids unique (identical re-declarations are tolerated)
// plus informational warnings for declared (system, goal) pairs with no
// assumptions. Diagnostics carry the given file name with position 1:1.
std::vector<ParseDiagnostic> validate_model(const ModelData& data,
                                            const std::string& file_name);

// Validated models can only carry the informational warnings.
std::vector<ParseDiagnostic> validate_model(const TrustModel& model);

// A validated, immutable trust model. Assumptions are held sorted by
// (system, goal, party); systems/goals/notes in canonical order.
class TrustModel {
 public:
  TrustModel() = default;  // the empty model

  // Canonicalizes and validates; on error returns the diagnostics instead.
  static ParseResult create(ModelData data,
                            const std::string& origin = "<model>");

  std::span<const System> systems() const { return systems_; }
  std::span<const Goal> goals() const { return goals_; }
  std::span<const TrustAssumption> assumptions() const { return assumptions_; }
  std::span<const ConditionNote> notes() const { return notes_; }
  const std::string& provenance() const { return provenance_; }

  bool has_system(System s) const;
  bool has_goal(Goal g) const;

  // The cell set for one (system, goal); empty span when none.
  std::span<const TrustAssumption> assumptions(System s, Goal g) const;

  const TrustAssumption* find(System s, Goal g, Party p) const;
  const ConditionNote* find_note(int id) const;

  std::size_t assumption_count() const { return assumptions_.size(); }

  // Copy of the underlying data, e.g. for deriving a modified model.
  ModelData data() const;

  TrustModel with_provenance(std::string provenance) const;

  // Structural equality on canonical form; provenance is metadata and does
  // not participate.
  friend bool operator==(const TrustModel& a, const TrustModel& b);

 private:
  std::vector<System> systems_;
  std::vector<Goal> goals_;
  std::vector<TrustAssumption> assumptions_;
  std::vector<ConditionNote> notes_;
  std::string provenance_;
};

// Result of any operation that either yields a model or fails with
// diagnostics. Warnings may be present either way.
struct ParseResult {
  std::optional<TrustModel> model;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

}  // namespace vtm
