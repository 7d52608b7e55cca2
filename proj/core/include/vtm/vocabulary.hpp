#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace vtm {

// Parties a voting system may have to trust (matrix columns).
enum class Party : std::uint8_t {
  voter,
  voters_computer,
  registrar,
  election_organiser,
  infrastructure_provider,
  polling_station_official,
  printing_house,
  election_observer,
  identity_provider,
  postal_service,
  hardware_vendor,
  software_vendor,
};

inline constexpr std::size_t kPartyCount = 12;

// Security goals (matrix row blocks). equal_and_universal_suffrage covers two
// requirement names; see goal_requirement_names().
enum class Goal : std::uint8_t {
  ballot_secrecy,
  coercion_resistance,
  equal_and_universal_suffrage,
  eligibility_verification,
  delivery_verification,
  ballot_box_integrity,
  tally_integrity,
};

inline constexpr std::size_t kGoalCount = 7;

// The eight concrete voting systems, in display order.
enum class System : std::uint8_t {
  paper_voting,
  crypto_paper_voting,
  postal_voting,
  crypto_postal_voting,
  machine_voting_paper_trail,
  machine_voting_no_trail,
  ivoting_individual,
  ivoting_universal,
};

inline constexpr std::size_t kSystemCount = 8;

enum class SystemClass : std::uint8_t {
  polling_station_paper,
  postal,
  machine,
  internet,
};

// Impact criticality if the trusted party misbehaves.
// Total order: single < subset < all.
enum class Impact : std::uint8_t { single = 1, subset = 2, all = 3 };

// Whether trust is required unconditionally or only under a noted condition.
// Total order: conditional < full.
enum class TrustMode : std::uint8_t { conditional = 1, full = 2 };

// Scenario conditions that can void conditional notes.
enum class Condition : std::uint8_t {
  reliable_ids_available,
  code_voting_in_use,
  print_on_demand,
};

inline constexpr std::size_t kConditionCount = 3;

constexpr int impact_rank(Impact i) { return static_cast<int>(i); }
constexpr int mode_rank(TrustMode m) { return static_cast<int>(m); }

// (impact, mode) under the product partial order. (all, conditional) vs
// (subset, full) and (subset, conditional) vs (single, full) are incomparable.
struct SeverityKey {
  Impact impact{Impact::single};
  TrustMode mode{TrustMode::full};

  friend constexpr bool operator==(SeverityKey, SeverityKey) = default;
};

constexpr SeverityKey severity_key(Impact impact, TrustMode mode) {
  return SeverityKey{impact, mode};
}

constexpr bool severity_leq(SeverityKey a, SeverityKey b) {
  return impact_rank(a.impact) <= impact_rank(b.impact) &&
         mode_rank(a.mode) <= mode_rank(b.mode);
}

// Canonical display orders. All rendering and serialization follows these.
std::span<const System> canonical_systems();
std::span<const Goal> canonical_goals();
std::span<const Party> canonical_parties();
std::span<const Impact> all_impacts();
std::span<const TrustMode> all_modes();
std::span<const Condition> all_conditions();

SystemClass system_class(System s);

// Machine tokens used by the text format and JSON.
std::string_view token(Party p);
std::string_view token(Goal g);
std::string_view token(System s);
std::string_view token(Impact i);
std::string_view token(TrustMode m);
std::string_view token(Condition c);
std::string_view token(SystemClass c);

// Human-readable names. display_name(System) is also the quoted system
// string accepted by the text format.
std::string_view display_name(Party p);
std::string_view display_name(Goal g);
std::string_view display_name(System s);

// Requirement names covered by a goal. equal_and_universal_suffrage carries
// two ("Equal suffrage", "Universal suffrage"); every other goal exactly one.
std::span<const std::string_view> goal_requirement_names(Goal g);

std::optional<Party> party_from_token(std::string_view t);
std::optional<Goal> goal_from_token(std::string_view t);
std::optional<System> system_from_token(std::string_view t);
std::optional<System> system_from_display_name(std::string_view name);
std::optional<Impact> impact_from_token(std::string_view t);
std::optional<TrustMode> mode_from_token(std::string_view t);
std::optional<Condition> condition_from_token(std::string_view t);

constexpr std::size_t index_of(Party p) { return static_cast<std::size_t>(p); }
constexpr std::size_t index_of(Goal g) { return static_cast<std::size_t>(g); }
constexpr std::size_t index_of(System s) { return static_cast<std::size_t>(s); }
constexpr std::size_t index_of(Condition c) { return static_cast<std::size_t>(c); }

}  // namespace vtm
