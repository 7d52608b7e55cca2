#pragma once

#include <optional>
#include <span>
#include <string>

#include "vtm/analysis.hpp"
#include "vtm/claims.hpp"
#include "vtm/scenario.hpp"

namespace vtm::cli {

enum class RenderFormat { markdown, csv, json };

std::optional<RenderFormat> render_format_from_token(std::string_view t);

// All renderers produce byte-stable output for identical inputs: canonical
// orders throughout, LF line endings, no locale dependence. CSV quoting
// follows RFC 4180 (quote fields containing comma/quote/newline, double
// embedded quotes).
std::string render_matrix(const GoalMatrix& matrix, RenderFormat format);

std::string render_profile(System system, Goal goal,
                           const CriticalityProfile& profile,
                           RenderFormat format);

std::string render_compare(System a, System b, std::optional<Goal> scope,
                           const DominanceResult& result, RenderFormat format);

std::string render_frontier(Goal goal,
                            std::span<const std::vector<System>> classes,
                            RenderFormat format);

std::string render_scores(std::span<const RankEntry> entries,
                          std::optional<Goal> scope, RenderFormat format);

std::string render_rank(std::span<const RankEntry> entries,
                        std::optional<Goal> scope, RenderFormat format);

std::string render_breach_report(const BreachReport& report,
                                 RenderFormat format);

std::string render_coalitions(System system, Goal goal, Impact level,
                              std::span<const Coalition> coalitions,
                              RenderFormat format);

std::string render_resilience(System system,
                              std::span<const ResilienceEntry> entries,
                              RenderFormat format);

std::string render_delta(const DeltaReport& delta, RenderFormat format);

// use_color only affects markdown PASS/FAIL markers on a terminal.
std::string render_claims(const ClaimReport& report, RenderFormat format,
                          bool use_color = false);

}  // namespace vtm::cli
