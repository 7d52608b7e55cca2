#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "render.hpp"
#include "vtm/corpus.hpp"
#include "vtm/json_io.hpp"
#include "vtm/merge.hpp"
#include "vtm/parse.hpp"
#include "vtm/serialize.hpp"

#if defined(_WIN32)
#include <io.h>
#define VTM_ISATTY _isatty
#define VTM_FILENO _fileno
#else
#include <unistd.h>
#define VTM_ISATTY isatty
#define VTM_FILENO fileno
#endif

namespace vtm::cli {

namespace {

struct ModelOptions {
  std::vector<std::string> files;
  bool corpus = false;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  cmd->add_option("--model", opts.files,
                  "Model files (.vtm); merged with --corpus when both given");
  cmd->add_flag("--corpus", opts.corpus,
                "Use the bundled reference corpus (default when no files)");
}

struct FormatOption {
  std::string text = "markdown";

  std::optional<RenderFormat> parse() const {
    return render_format_from_token(text);
  }
};

void add_format_option(CLI::App* cmd, FormatOption& fmt) {
  cmd->add_option("--format", fmt.text, "Output format: markdown, csv, json")
      ->capture_default_str();
}

void print_diagnostics(std::span<const ParseDiagnostic> ds,
                       std::ostream& err) {
  for (const auto& d : ds) err << to_string(d) << "\n";
}

std::optional<std::string> read_file(const std::string& path,
                                     std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read file '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Loads the model named by --model/--corpus; the corpus is the default study
// object when no files are given. Returns nullopt with *exit_code set.
std::optional<TrustModel> load_model(const ModelOptions& opts,
                                     std::ostream& err, int* exit_code) {
  std::optional<TrustModel> from_files;
  if (!opts.files.empty()) {
    std::vector<SourceFile> sources;
    for (const std::string& path : opts.files) {
      auto text = read_file(path, err);
      if (!text) {
        *exit_code = kExitParseError;
        return std::nullopt;
      }
      sources.push_back({path, std::move(*text)});
    }
    ParseResult parsed = parse_model_files(sources);
    print_diagnostics(parsed.diagnostics, err);
    if (!parsed.ok()) {
      *exit_code = kExitParseError;
      return std::nullopt;
    }
    from_files = std::move(parsed.model);
  }

  const bool want_corpus = opts.corpus || opts.files.empty();
  if (!want_corpus) return from_files;

  TrustModel corpus = load_builtin_corpus();
  if (!from_files) return corpus;

  const std::array<TrustModel, 2> inputs = {std::move(corpus),
                                            std::move(*from_files)};
  ParseResult merged = merge_models(inputs);
  print_diagnostics(merged.diagnostics, err);
  if (!merged.ok()) {
    *exit_code = kExitFailures;
    return std::nullopt;
  }
  return std::move(merged.model);
}

std::optional<System> parse_system_arg(const std::string& text,
                                       std::ostream& err) {
  auto s = system_from_token(text);
  if (!s) err << "error: unknown system token '" << text << "'\n";
  return s;
}

std::optional<Goal> parse_goal_arg(const std::string& text,
                                   std::ostream& err) {
  auto g = goal_from_token(text);
  if (!g) err << "error: unknown goal token '" << text << "'\n";
  return g;
}

std::optional<Impact> parse_level_arg(const std::string& text,
                                      std::ostream& err) {
  auto i = impact_from_token(text);
  if (!i) err << "error: unknown impact token '" << text << "'\n";
  return i;
}

// "--weights single,subset,all,conditional_factor", e.g. "1,4,16,1/2".
std::optional<WeightConfig> parse_weights_arg(const std::string& text,
                                              std::ostream& err) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 4) {
    err << "error: --weights needs four comma-separated rationals "
           "(single,subset,all,conditional_factor)\n";
    return std::nullopt;
  }
  std::array<Rational, 4> values;
  for (std::size_t i = 0; i < 4; ++i) {
    auto r = Rational::parse(parts[i]);
    if (!r) {
      err << "error: cannot parse weight '" << parts[i] << "'\n";
      return std::nullopt;
    }
    values[i] = *r;
  }
  WeightConfig weights{values[0], values[1], values[2], values[3]};
  if (!weights.admissible()) {
    err << "error: inadmissible weights: need 0 <= single <= subset <= all "
           "and 0 < conditional_factor <= 1\n";
    return std::nullopt;
  }
  return weights;
}

// "system:goal:party"
std::optional<CellRef> parse_cell_ref(const std::string& text,
                                      std::ostream& err) {
  auto first = text.find(':');
  auto second = first == std::string::npos ? std::string::npos
                                           : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    err << "error: --remove expects SYSTEM:GOAL:PARTY, got '" << text << "'\n";
    return std::nullopt;
  }
  auto system = parse_system_arg(text.substr(0, first), err);
  auto goal = parse_goal_arg(text.substr(first + 1, second - first - 1), err);
  auto party = party_from_token(text.substr(second + 1));
  if (!party) {
    err << "error: unknown party token '" << text.substr(second + 1) << "'\n";
  }
  if (!system || !goal || !party) return std::nullopt;
  return CellRef{*system, *goal, *party};
}

std::optional<Scenario> load_scenario(const std::string& path,
                                      std::ostream& err, int* exit_code) {
  auto text = read_file(path, err);
  if (!text) {
    *exit_code = kExitParseError;
    return std::nullopt;
  }
  ScenarioParseResult parsed = parse_scenario(*text, path);
  print_diagnostics(parsed.diagnostics, err);
  if (!parsed.ok()) {
    *exit_code = kExitParseError;
    return std::nullopt;
  }
  return std::move(parsed.scenario);
}

bool color_enabled(const std::ostream& out) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  if (&out != static_cast<const std::ostream*>(&std::cout)) return false;
  return VTM_ISATTY(VTM_FILENO(stdout)) != 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Voting-system trust assumption modeling and comparison"};
  app.name("vtm");
  app.require_subcommand(1);

  // validate
  auto* cmd_validate =
      app.add_subcommand("validate", "Parse and validate model files");
  std::vector<std::string> validate_files;
  ModelOptions validate_opts;
  cmd_validate->add_option("files", validate_files, "Model files (.vtm)");
  cmd_validate->add_flag("--corpus", validate_opts.corpus,
                         "Also include the bundled corpus");

  // matrix
  auto* cmd_matrix =
      app.add_subcommand("matrix", "Render the trust matrix for one goal");
  std::string matrix_goal;
  ModelOptions matrix_opts;
  FormatOption matrix_fmt;
  cmd_matrix->add_option("--goal", matrix_goal, "Goal token")->required();
  add_model_options(cmd_matrix, matrix_opts);
  add_format_option(cmd_matrix, matrix_fmt);

  // profile
  auto* cmd_profile = app.add_subcommand(
      "profile", "Assumption counts by impact level and trust mode");
  std::string profile_system, profile_goal;
  ModelOptions profile_opts;
  FormatOption profile_fmt;
  cmd_profile->add_option("--system", profile_system, "System token")
      ->required();
  cmd_profile->add_option("--goal", profile_goal, "Goal token")->required();
  add_model_options(cmd_profile, profile_opts);
  add_format_option(cmd_profile, profile_fmt);

  // compare
  auto* cmd_compare =
      app.add_subcommand("compare", "Dominance relation between two systems");
  std::string compare_a, compare_b, compare_goal;
  bool compare_overall = false;
  ModelOptions compare_opts;
  FormatOption compare_fmt;
  cmd_compare->add_option("a", compare_a, "First system token")->required();
  cmd_compare->add_option("b", compare_b, "Second system token")->required();
  cmd_compare->add_option("--goal", compare_goal, "Restrict to one goal");
  cmd_compare->add_flag("--overall", compare_overall,
                        "Compare across all goals (default)");
  add_model_options(cmd_compare, compare_opts);
  add_format_option(cmd_compare, compare_fmt);

  // frontier
  auto* cmd_frontier = app.add_subcommand(
      "frontier", "Systems not strictly dominated on a goal");
  std::string frontier_goal;
  ModelOptions frontier_opts;
  FormatOption frontier_fmt;
  cmd_frontier->add_option("--goal", frontier_goal, "Goal token")->required();
  add_model_options(cmd_frontier, frontier_opts);
  add_format_option(cmd_frontier, frontier_fmt);

  // score / rank
  auto* cmd_score =
      app.add_subcommand("score", "Weighted assumption burden per system");
  auto* cmd_rank =
      app.add_subcommand("rank", "Systems ordered by weighted burden");
  std::string score_goal, rank_goal;
  bool score_overall = false, rank_overall = false;
  std::string score_weights, rank_weights;
  ModelOptions score_opts, rank_opts;
  FormatOption score_fmt, rank_fmt;
  cmd_score->add_option("--goal", score_goal, "Restrict to one goal");
  cmd_score->add_flag("--overall", score_overall,
                      "Sum across all goals (default)");
  cmd_score->add_option("--weights", score_weights,
                        "single,subset,all,conditional_factor");
  add_model_options(cmd_score, score_opts);
  add_format_option(cmd_score, score_fmt);
  cmd_rank->add_option("--goal", rank_goal, "Restrict to one goal");
  cmd_rank->add_flag("--overall", rank_overall,
                     "Sum across all goals (default)");
  cmd_rank->add_option("--weights", rank_weights,
                       "single,subset,all,conditional_factor");
  add_model_options(cmd_rank, rank_opts);
  add_format_option(cmd_rank, rank_fmt);

  // whatif
  auto* cmd_whatif = app.add_subcommand(
      "whatif", "Corruption scenarios and cell-removal deltas");
  std::string whatif_scenario, whatif_system, whatif_weights;
  std::vector<std::string> whatif_remove_args;
  ModelOptions whatif_opts;
  FormatOption whatif_fmt;
  cmd_whatif->add_option("--scenario", whatif_scenario,
                         "Scenario file (.vts) with corrupt/set lines");
  cmd_whatif->add_option("--system", whatif_system,
                         "Restrict the breach report to one system");
  cmd_whatif->add_option("--remove", whatif_remove_args,
                         "Remove cells SYSTEM:GOAL:PARTY and report deltas");
  cmd_whatif->add_option("--weights", whatif_weights,
                         "Weights for the rank deltas");
  add_model_options(cmd_whatif, whatif_opts);
  add_format_option(cmd_whatif, whatif_fmt);

  // coalition
  auto* cmd_coalition = app.add_subcommand(
      "coalition",
      "Minimal breaking coalitions; without --goal/--level, the "
      "per-goal resilience summary");
  std::string coalition_system, coalition_goal, coalition_level,
      coalition_scenario;
  ModelOptions coalition_opts;
  FormatOption coalition_fmt;
  cmd_coalition->add_option("--system", coalition_system, "System token")
      ->required();
  cmd_coalition->add_option("--goal", coalition_goal, "Goal token");
  cmd_coalition->add_option("--level", coalition_level,
                            "Target impact: single, subset, all");
  cmd_coalition->add_option("--scenario", coalition_scenario,
                            "Scenario file supplying condition settings");
  add_model_options(cmd_coalition, coalition_opts);
  add_format_option(cmd_coalition, coalition_fmt);

  // claims
  auto* cmd_claims = app.add_subcommand(
      "claims", "Recompute the recorded expectations for the corpus");
  ModelOptions claims_opts;
  FormatOption claims_fmt;
  add_model_options(cmd_claims, claims_opts);
  add_format_option(cmd_claims, claims_fmt);

  // export
  auto* cmd_export =
      app.add_subcommand("export", "Export the model as JSON or canonical "
                                   "text");
  ModelOptions export_opts;
  FormatOption export_fmt;
  export_fmt.text = "json";
  add_model_options(cmd_export, export_opts);
  cmd_export->add_option("--format", export_fmt.text,
                         "Output format: json (default) or vtm")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("vtm");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return kExitUsage;
  }

  try {
    int exit_code = kExitOk;

    if (cmd_validate->parsed()) {
      ModelOptions opts = validate_opts;
      opts.files = validate_files;
      auto model = load_model(opts, err, &exit_code);
      if (!model) return exit_code;
      auto warnings = validate_model(*model);
      out << "ok: " << model->systems().size() << " systems, "
          << model->goals().size() << " goals, " << model->assumption_count()
          << " assumptions, " << model->notes().size() << " notes\n";
      for (const auto& d : warnings) out << to_string(d) << "\n";
      return kExitOk;
    }

    if (cmd_matrix->parsed()) {
      auto format = matrix_fmt.parse();
      auto goal = parse_goal_arg(matrix_goal, err);
      if (!format || !goal) return kExitUsage;
      auto model = load_model(matrix_opts, err, &exit_code);
      if (!model) return exit_code;
      out << render_matrix(goal_matrix(*model, *goal), *format);
      return kExitOk;
    }

    if (cmd_profile->parsed()) {
      auto format = profile_fmt.parse();
      auto system = parse_system_arg(profile_system, err);
      auto goal = parse_goal_arg(profile_goal, err);
      if (!format || !system || !goal) return kExitUsage;
      auto model = load_model(profile_opts, err, &exit_code);
      if (!model) return exit_code;
      out << render_profile(*system, *goal, profile(*model, *system, *goal),
                            *format);
      return kExitOk;
    }

    if (cmd_compare->parsed()) {
      auto format = compare_fmt.parse();
      auto a = parse_system_arg(compare_a, err);
      auto b = parse_system_arg(compare_b, err);
      if (!format || !a || !b) return kExitUsage;
      if (compare_overall && !compare_goal.empty()) {
        err << "error: --goal and --overall are mutually exclusive\n";
        return kExitUsage;
      }
      std::optional<Goal> scope;
      if (!compare_goal.empty()) {
        scope = parse_goal_arg(compare_goal, err);
        if (!scope) return kExitUsage;
      }
      auto model = load_model(compare_opts, err, &exit_code);
      if (!model) return exit_code;
      out << render_compare(*a, *b, scope, dominance(*model, *a, *b, scope),
                            *format);
      return kExitOk;
    }

    if (cmd_frontier->parsed()) {
      auto format = frontier_fmt.parse();
      auto goal = parse_goal_arg(frontier_goal, err);
      if (!format || !goal) return kExitUsage;
      auto model = load_model(frontier_opts, err, &exit_code);
      if (!model) return exit_code;
      auto classes = pareto_frontier(*model, *goal);
      out << render_frontier(*goal, classes, *format);
      return kExitOk;
    }

    if (cmd_score->parsed() || cmd_rank->parsed()) {
      const bool is_rank = cmd_rank->parsed();
      auto& fmt = is_rank ? rank_fmt : score_fmt;
      auto& goal_text = is_rank ? rank_goal : score_goal;
      auto& overall = is_rank ? rank_overall : score_overall;
      auto& weights_text = is_rank ? rank_weights : score_weights;
      auto& opts = is_rank ? rank_opts : score_opts;

      auto format = fmt.parse();
      if (!format) return kExitUsage;
      if (overall && !goal_text.empty()) {
        err << "error: --goal and --overall are mutually exclusive\n";
        return kExitUsage;
      }
      std::optional<Goal> scope;
      if (!goal_text.empty()) {
        scope = parse_goal_arg(goal_text, err);
        if (!scope) return kExitUsage;
      }
      WeightConfig weights = WeightConfig::defaults();
      if (!weights_text.empty()) {
        auto parsed = parse_weights_arg(weights_text, err);
        if (!parsed) return kExitUsage;
        weights = *parsed;
      }
      auto model = load_model(opts, err, &exit_code);
      if (!model) return exit_code;
      auto entries = rank(*model, scope, weights);
      out << (is_rank ? render_rank(entries, scope, *format)
                      : render_scores(entries, scope, *format));
      return kExitOk;
    }

    if (cmd_whatif->parsed()) {
      auto format = whatif_fmt.parse();
      if (!format) return kExitUsage;
      if (!whatif_scenario.empty() && !whatif_remove_args.empty()) {
        err << "error: --scenario and --remove are mutually exclusive\n";
        return kExitUsage;
      }
      if (whatif_scenario.empty() && whatif_remove_args.empty()) {
        err << "error: whatif needs --scenario FILE or --remove "
               "SYSTEM:GOAL:PARTY\n";
        return kExitUsage;
      }

      if (!whatif_remove_args.empty()) {
        std::vector<CellRef> refs;
        for (const std::string& text : whatif_remove_args) {
          auto ref = parse_cell_ref(text, err);
          if (!ref) return kExitUsage;
          refs.push_back(*ref);
        }
        WeightConfig weights = WeightConfig::defaults();
        if (!whatif_weights.empty()) {
          auto parsed = parse_weights_arg(whatif_weights, err);
          if (!parsed) return kExitUsage;
          weights = *parsed;
        }
        auto model = load_model(whatif_opts, err, &exit_code);
        if (!model) return exit_code;
        auto result = whatif_remove(*model, refs, weights);
        out << render_delta(result.delta, *format);
        return kExitOk;
      }

      auto scenario = load_scenario(whatif_scenario, err, &exit_code);
      if (!scenario) return exit_code;
      std::optional<System> only;
      if (!whatif_system.empty()) {
        only = parse_system_arg(whatif_system, err);
        if (!only) return kExitUsage;
      }
      auto model = load_model(whatif_opts, err, &exit_code);
      if (!model) return exit_code;
      out << render_breach_report(
          breach_report(*model, scenario->coalition, scenario->env, only),
          *format);
      return kExitOk;
    }

    if (cmd_coalition->parsed()) {
      auto format = coalition_fmt.parse();
      auto system = parse_system_arg(coalition_system, err);
      if (!format || !system) return kExitUsage;
      if (coalition_goal.empty() != coalition_level.empty()) {
        err << "error: --goal and --level go together\n";
        return kExitUsage;
      }
      ScenarioEnv env = ScenarioEnv::defaults();
      if (!coalition_scenario.empty()) {
        auto scenario = load_scenario(coalition_scenario, err, &exit_code);
        if (!scenario) return exit_code;
        env = scenario->env;
      }
      auto model = load_model(coalition_opts, err, &exit_code);
      if (!model) return exit_code;
      if (coalition_goal.empty()) {
        auto entries = system_resilience(*model, *system, env);
        out << render_resilience(*system, entries, *format);
        return kExitOk;
      }
      auto goal = parse_goal_arg(coalition_goal, err);
      auto level = parse_level_arg(coalition_level, err);
      if (!goal || !level) return kExitUsage;
      auto coalitions = minimal_coalitions(*model, *system, *goal, *level, env);
      out << render_coalitions(*system, *goal, *level, coalitions, *format);
      return kExitOk;
    }

    if (cmd_claims->parsed()) {
      auto format = claims_fmt.parse();
      if (!format) return kExitUsage;
      auto model = load_model(claims_opts, err, &exit_code);
      if (!model) return exit_code;
      ClaimReport report = check_builtin_claims(*model);
      out << render_claims(report, *format, color_enabled(out));
      return report.all_pass() ? kExitOk : kExitFailures;
    }

    if (cmd_export->parsed()) {
      const bool as_vtm = export_fmt.text == "vtm";
      auto format = export_fmt.parse();
      if (!as_vtm && (!format || *format != RenderFormat::json)) {
        err << "error: export supports --format json or --format vtm\n";
        return kExitUsage;
      }
      auto model = load_model(export_opts, err, &exit_code);
      if (!model) return exit_code;
      out << (as_vtm ? serialize_model(*model) : model_to_json(*model));
      return kExitOk;
    }

    err << "error: no subcommand given\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailures;
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}

}  // namespace vtm::cli
