#include "vtm/vocabulary.hpp"

#include <algorithm>

namespace vtm {

namespace {

constexpr std::array<System, kSystemCount> kSystems = {
    System::paper_voting,
    System::crypto_paper_voting,
    System::postal_voting,
    System::crypto_postal_voting,
    System::machine_voting_paper_trail,
    System::machine_voting_no_trail,
    System::ivoting_individual,
    System::ivoting_universal,
};

constexpr std::array<Goal, kGoalCount> kGoals = {
    Goal::ballot_secrecy,
    Goal::coercion_resistance,
    Goal::equal_and_universal_suffrage,
    Goal::eligibility_verification,
    Goal::delivery_verification,
    Goal::ballot_box_integrity,
    Goal::tally_integrity,
};

constexpr std::array<Party, kPartyCount> kParties = {
    Party::voter,
    Party::voters_computer,
    Party::registrar,
    Party::election_organiser,
    Party::infrastructure_provider,
    Party::polling_station_official,
    Party::printing_house,
    Party::election_observer,
    Party::identity_provider,
    Party::postal_service,
    Party::hardware_vendor,
    Party::software_vendor,
};

constexpr std::array<Impact, 3> kImpacts = {Impact::single, Impact::subset,
                                            Impact::all};
constexpr std::array<TrustMode, 2> kModes = {TrustMode::conditional,
                                             TrustMode::full};
constexpr std::array<Condition, kConditionCount> kConditions = {
    Condition::reliable_ids_available,
    Condition::code_voting_in_use,
    Condition::print_on_demand,
};

constexpr std::array<std::string_view, kPartyCount> kPartyTokens = {
    "voter",
    "voters_computer",
    "registrar",
    "election_organiser",
    "infrastructure_provider",
    "polling_station_official",
    "printing_house",
    "election_observer",
    "identity_provider",
    "postal_service",
    "hardware_vendor",
    "software_vendor",
};

constexpr std::array<std::string_view, kPartyCount> kPartyNames = {
    "Voter",
    "Voter's computer",
    "Registrar",
    "Election organiser",
    "Infrastructure provider",
    "Polling station official",
    "Printing house",
    "Election observer",
    "Identity provider",
    "Postal service",
    "Hardware vendor",
    "Software vendor",
};

constexpr std::array<std::string_view, kGoalCount> kGoalTokens = {
    "ballot_secrecy",
    "coercion_resistance",
    "equal_and_universal_suffrage",
    "eligibility_verification",
    "delivery_verification",
    "ballot_box_integrity",
    "tally_integrity",
};

constexpr std::array<std::string_view, kGoalCount> kGoalNames = {
    "Ballot secrecy",
    "Coercion-resistance",
    "Equal & universal suffrage",
    "Verification of eligibility",
    "Verification of delivery",
    "Verification of ballot box integrity",
    "Verification of tally integrity",
};

constexpr std::array<std::string_view, kSystemCount> kSystemTokens = {
    "paper_voting",
    "crypto_paper_voting",
    "postal_voting",
    "crypto_postal_voting",
    "machine_voting_paper_trail",
    "machine_voting_no_trail",
    "ivoting_individual",
    "ivoting_universal",
};

constexpr std::array<std::string_view, kSystemCount> kSystemNames = {
    "Paper voting",
    "Cryptographic paper voting",
    "Postal voting",
    "Cryptographic postal voting",
    "Machine voting with paper trail",
    "Machine voting, no paper trail",
    "I-voting (individual verifiability)",
    "I-voting (universal verifiability)",
};

constexpr std::array<SystemClass, kSystemCount> kSystemClasses = {
    SystemClass::polling_station_paper,
    SystemClass::polling_station_paper,
    SystemClass::postal,
    SystemClass::postal,
    SystemClass::machine,
    SystemClass::machine,
    SystemClass::internet,
    SystemClass::internet,
};

constexpr std::array<std::string_view, 4> kSystemClassTokens = {
    "polling_station_paper",
    "postal",
    "machine",
    "internet",
};

constexpr std::array<std::string_view, kConditionCount> kConditionTokens = {
    "reliable_ids_available",
    "code_voting_in_use",
    "print_on_demand",
};

constexpr std::array<std::string_view, 1> kBallotSecrecyReqs = {
    "Ballot secrecy"};
constexpr std::array<std::string_view, 1> kCoercionReqs = {
    "Coercion resistance"};
constexpr std::array<std::string_view, 2> kSuffrageReqs = {"Equal suffrage",
                                                           "Universal suffrage"};
constexpr std::array<std::string_view, 1> kEligibilityReqs = {
    "Verification of eligibility"};
constexpr std::array<std::string_view, 1> kDeliveryReqs = {
    "Verification of delivery"};
constexpr std::array<std::string_view, 1> kBallotBoxReqs = {
    "Verification of ballot box integrity"};
constexpr std::array<std::string_view, 1> kTallyReqs = {
    "Verification of tally integrity"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& table,
                           std::string_view t) {
  auto it = std::find(table.begin(), table.end(), t);
  if (it == table.end()) return std::nullopt;
  return static_cast<Enum>(it - table.begin());
}

}  // namespace

std::span<const System> canonical_systems() { return kSystems; }
std::span<const Goal> canonical_goals() { return kGoals; }
std::span<const Party> canonical_parties() { return kParties; }
std::span<const Impact> all_impacts() { return kImpacts; }
std::span<const TrustMode> all_modes() { return kModes; }
std::span<const Condition> all_conditions() { return kConditions; }

SystemClass system_class(System s) { return kSystemClasses[index_of(s)]; }

std::string_view token(Party p) { return kPartyTokens[index_of(p)]; }
std::string_view token(Goal g) { return kGoalTokens[index_of(g)]; }
std::string_view token(System s) { return kSystemTokens[index_of(s)]; }

std::string_view token(Impact i) {
  switch (i) {
    case Impact::single: return "single";
    case Impact::subset: return "subset";
    case Impact::all: return "all";
  }
  return "?";
}

std::string_view token(TrustMode m) {
  return m == TrustMode::full ? "full" : "conditional";
}

std::string_view token(Condition c) { return kConditionTokens[index_of(c)]; }

std::string_view token(SystemClass c) {
  return kSystemClassTokens[static_cast<std::size_t>(c)];
}

std::string_view display_name(Party p) { return kPartyNames[index_of(p)]; }
std::string_view display_name(Goal g) { return kGoalNames[index_of(g)]; }
std::string_view display_name(System s) { return kSystemNames[index_of(s)]; }

std::span<const std::string_view> goal_requirement_names(Goal g) {
  switch (g) {
    case Goal::ballot_secrecy: return kBallotSecrecyReqs;
    case Goal::coercion_resistance: return kCoercionReqs;
    case Goal::equal_and_universal_suffrage: return kSuffrageReqs;
    case Goal::eligibility_verification: return kEligibilityReqs;
    case Goal::delivery_verification: return kDeliveryReqs;
    case Goal::ballot_box_integrity: return kBallotBoxReqs;
    case Goal::tally_integrity: return kTallyReqs;
  }
  return {};
}

std::optional<Party> party_from_token(std::string_view t) {
  return lookup<Party>(kPartyTokens, t);
}

std::optional<Goal> goal_from_token(std::string_view t) {
  return lookup<Goal>(kGoalTokens, t);
}

std::optional<System> system_from_token(std::string_view t) {
  return lookup<System>(kSystemTokens, t);
}

std::optional<System> system_from_display_name(std::string_view name) {
  return lookup<System>(kSystemNames, name);
}

std::optional<Impact> impact_from_token(std::string_view t) {
  if (t == "single") return Impact::single;
  if (t == "subset") return Impact::subset;
  if (t == "all") return Impact::all;
  return std::nullopt;
}

std::optional<TrustMode> mode_from_token(std::string_view t) {
  if (t == "full") return TrustMode::full;
  if (t == "conditional") return TrustMode::conditional;
  return std::nullopt;
}

std::optional<Condition> condition_from_token(std::string_view t) {
  return lookup<Condition>(kConditionTokens, t);
}

}  // namespace vtm
