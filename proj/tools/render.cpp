#include "render.hpp"

#include <json.hpp>
#include <sstream>

namespace vtm::cli {

namespace {

using nlohmann::ordered_json;

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_quote(const std::string& field) {
  bool needs_quoting = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quoting) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const TextTable& table) {
  std::string out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_quote(row[i]);
    }
    out += '\n';
  };
  emit_row(table.header);
  for (const auto& row : table.rows) emit_row(row);
  return out;
}

std::string to_markdown(const TextTable& table) {
  std::string out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    out += '|';
    for (const auto& cell : row) {
      out += ' ';
      out += cell;
      out += " |";
    }
    out += '\n';
  };
  emit_row(table.header);
  out += '|';
  for (std::size_t i = 0; i < table.header.size(); ++i) out += "---|";
  out += '\n';
  for (const auto& row : table.rows) emit_row(row);
  return out;
}

std::string render_table(const TextTable& table, RenderFormat format) {
  return format == RenderFormat::csv ? to_csv(table) : to_markdown(table);
}

// "impact/mode" with the note ids appended, e.g. "all/conditional[5,11]".
std::string cell_text(const MatrixCell& cell) {
  std::string s = std::string(token(cell.impact)) + "/" +
                  std::string(token(cell.mode));
  if (!cell.notes.empty()) {
    s += '[';
    for (std::size_t i = 0; i < cell.notes.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cell.notes[i]);
    }
    s += ']';
  }
  return s;
}

ordered_json json_cell(const MatrixCell& cell) {
  ordered_json j;
  j["impact"] = token(cell.impact);
  j["mode"] = token(cell.mode);
  if (!cell.notes.empty()) j["notes"] = cell.notes;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json json_rank_entries(std::span<const RankEntry> entries) {
  ordered_json arr = ordered_json::array();
  for (const RankEntry& e : entries) {
    ordered_json j;
    j["rank"] = e.tie_group + 1;
    j["system"] = token(e.system);
    j["score"] = e.score.str();
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string scope_name(std::optional<Goal> scope) {
  return scope ? std::string(token(*scope)) : std::string("overall");
}

std::string coalition_text(const Coalition& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.parties.size(); ++i) {
    if (i) s += ", ";
    s += token(c.parties[i]);
  }
  s += '}';
  return s;
}

}  // namespace

std::optional<RenderFormat> render_format_from_token(std::string_view t) {
  if (t == "markdown" || t == "md") return RenderFormat::markdown;
  if (t == "csv") return RenderFormat::csv;
  if (t == "json") return RenderFormat::json;
  return std::nullopt;
}

std::string render_matrix(const GoalMatrix& matrix, RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["goal"] = token(matrix.goal);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < matrix.systems.size(); ++i) {
      ordered_json row;
      row["system"] = token(matrix.systems[i]);
      ordered_json cells = ordered_json::object();
      for (Party p : canonical_parties()) {
        const auto& cell = matrix.rows[i][index_of(p)];
        if (cell) cells[std::string(token(p))] = json_cell(*cell);
      }
      row["cells"] = std::move(cells);
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return dump(doc);
  }

  TextTable table;
  table.header.push_back("System");
  for (Party p : canonical_parties()) {
    table.header.push_back(format == RenderFormat::csv
                               ? std::string(token(p))
                               : std::string(display_name(p)));
  }
  for (std::size_t i = 0; i < matrix.systems.size(); ++i) {
    auto& row = table.rows.emplace_back();
    row.push_back(format == RenderFormat::csv
                      ? std::string(token(matrix.systems[i]))
                      : std::string(display_name(matrix.systems[i])));
    for (Party p : canonical_parties()) {
      const auto& cell = matrix.rows[i][index_of(p)];
      row.push_back(cell ? cell_text(*cell) : "");
    }
  }
  return render_table(table, format);
}

std::string render_profile(System system, Goal goal,
                           const CriticalityProfile& profile,
                           RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["system"] = token(system);
    doc["goal"] = token(goal);
    doc["total"] = profile.total;
    ordered_json by_impact;
    by_impact["single"] = profile.count(Impact::single);
    by_impact["subset"] = profile.count(Impact::subset);
    by_impact["all"] = profile.count(Impact::all);
    doc["by_impact"] = std::move(by_impact);
    ordered_json by_mode;
    by_mode["full"] = profile.count(TrustMode::full);
    by_mode["conditional"] = profile.count(TrustMode::conditional);
    doc["by_mode"] = std::move(by_mode);
    return dump(doc);
  }
  if (format == RenderFormat::csv) {
    TextTable table;
    table.header = {"system", "goal",   "total",      "all",
                    "subset", "single", "full",       "conditional"};
    table.rows.push_back({std::string(token(system)), std::string(token(goal)),
                          std::to_string(profile.total),
                          std::to_string(profile.count(Impact::all)),
                          std::to_string(profile.count(Impact::subset)),
                          std::to_string(profile.count(Impact::single)),
                          std::to_string(profile.count(TrustMode::full)),
                          std::to_string(profile.count(TrustMode::conditional))});
    return to_csv(table);
  }
  std::ostringstream os;
  os << "total " << profile.total << ", all " << profile.count(Impact::all)
     << ", subset " << profile.count(Impact::subset) << ", single "
     << profile.count(Impact::single) << "\n"
     << "full " << profile.count(TrustMode::full) << ", conditional "
     << profile.count(TrustMode::conditional) << "\n";
  return os.str();
}

namespace {

std::string obstruction_text(const DominanceObstruction& o, System holder) {
  std::string s = std::string(token(o.goal)) + ": " +
                  std::string(token(o.party));
  if (o.severity_conflict) {
    s += " trusted at severity not covered by the other system (held by ";
  } else {
    s += " trusted only by ";
  }
  s += token(holder);
  if (o.severity_conflict) s += ")";
  return s;
}

ordered_json json_obstructions(std::span<const DominanceObstruction> os) {
  ordered_json arr = ordered_json::array();
  for (const auto& o : os) {
    ordered_json j;
    j["goal"] = token(o.goal);
    j["party"] = token(o.party);
    j["reason"] = o.severity_conflict ? "severity" : "party_missing";
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

std::string render_compare(System a, System b, std::optional<Goal> scope,
                           const DominanceResult& result,
                           RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["a"] = token(a);
    doc["b"] = token(b);
    doc["scope"] = scope_name(scope);
    doc["relation"] = token(result.relation);
    doc["a_not_leq_b"] = json_obstructions(result.a_not_leq_b);
    doc["b_not_leq_a"] = json_obstructions(result.b_not_leq_a);
    return dump(doc);
  }
  if (format == RenderFormat::csv) {
    TextTable table;
    table.header = {"direction", "goal", "party", "reason"};
    for (const auto& o : result.a_not_leq_b) {
      table.rows.push_back({"a_not_leq_b", std::string(token(o.goal)),
                            std::string(token(o.party)),
                            o.severity_conflict ? "severity" : "party_missing"});
    }
    for (const auto& o : result.b_not_leq_a) {
      table.rows.push_back({"b_not_leq_a", std::string(token(o.goal)),
                            std::string(token(o.party)),
                            o.severity_conflict ? "severity" : "party_missing"});
    }
    return to_csv(table);
  }
  std::ostringstream os;
  os << token(a) << " vs " << token(b) << " (" << scope_name(scope)
     << "): " << token(result.relation) << "\n";
  if (!result.a_not_leq_b.empty()) {
    os << "why " << token(a) << " is not covered by " << token(b) << ":\n";
    for (const auto& o : result.a_not_leq_b) {
      os << "  " << obstruction_text(o, a) << "\n";
    }
  }
  if (!result.b_not_leq_a.empty()) {
    os << "why " << token(b) << " is not covered by " << token(a) << ":\n";
    for (const auto& o : result.b_not_leq_a) {
      os << "  " << obstruction_text(o, b) << "\n";
    }
  }
  return os.str();
}

std::string render_frontier(Goal goal,
                            std::span<const std::vector<System>> classes,
                            RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["goal"] = token(goal);
    ordered_json arr = ordered_json::array();
    for (const auto& cls : classes) {
      ordered_json c = ordered_json::array();
      for (System s : cls) c.push_back(token(s));
      arr.push_back(std::move(c));
    }
    doc["frontier"] = std::move(arr);
    return dump(doc);
  }
  if (format == RenderFormat::csv) {
    TextTable table;
    table.header = {"class", "system"};
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (System s : classes[i]) {
        table.rows.push_back({std::to_string(i + 1), std::string(token(s))});
      }
    }
    return to_csv(table);
  }
  std::ostringstream os;
  os << "frontier for " << token(goal) << ":\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    os << "  " << (i + 1) << ". {";
    for (std::size_t j = 0; j < classes[i].size(); ++j) {
      if (j) os << ", ";
      os << token(classes[i][j]);
    }
    os << "}\n";
  }
  return os.str();
}

std::string render_scores(std::span<const RankEntry> entries,
                          std::optional<Goal> scope, RenderFormat format) {
  // Scores print in canonical system order regardless of value.
  std::vector<RankEntry> ordered(entries.begin(), entries.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const RankEntry& a, const RankEntry& b) {
              return index_of(a.system) < index_of(b.system);
            });
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["scope"] = scope_name(scope);
    ordered_json arr = ordered_json::array();
    for (const RankEntry& e : ordered) {
      ordered_json j;
      j["system"] = token(e.system);
      j["score"] = e.score.str();
      arr.push_back(std::move(j));
    }
    doc["scores"] = std::move(arr);
    return dump(doc);
  }
  TextTable table;
  table.header = {"system", "score"};
  for (const RankEntry& e : ordered) {
    table.rows.push_back({std::string(token(e.system)), e.score.str()});
  }
  return render_table(table, format);
}

std::string render_rank(std::span<const RankEntry> entries,
                        std::optional<Goal> scope, RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["scope"] = scope_name(scope);
    doc["ranking"] = json_rank_entries(entries);
    return dump(doc);
  }
  TextTable table;
  table.header = {"rank", "system", "score"};
  for (const RankEntry& e : entries) {
    table.rows.push_back({std::to_string(e.tie_group + 1),
                          std::string(token(e.system)), e.score.str()});
  }
  return render_table(table, format);
}

std::string render_breach_report(const BreachReport& report,
                                 RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    ordered_json coalition = ordered_json::array();
    for (Party p : report.coalition.parties) coalition.push_back(token(p));
    doc["coalition"] = std::move(coalition);
    ordered_json env;
    for (Condition c : all_conditions()) {
      env[std::string(token(c))] = report.env.value(c);
    }
    doc["conditions"] = std::move(env);
    ordered_json arr = ordered_json::array();
    for (const auto& e : report.entries) {
      ordered_json j;
      j["system"] = token(e.system);
      j["goal"] = token(e.goal);
      j["breach"] =
          e.finding.level ? ordered_json(token(*e.finding.level)) : nullptr;
      ordered_json triggered = ordered_json::array();
      for (const auto& a : e.finding.triggered) {
        ordered_json t;
        t["party"] = token(a.party);
        t["impact"] = token(a.severity.impact);
        t["mode"] = token(a.severity.mode);
        triggered.push_back(std::move(t));
      }
      j["triggered"] = std::move(triggered);
      arr.push_back(std::move(j));
    }
    doc["entries"] = std::move(arr);
    return dump(doc);
  }

  TextTable table;
  table.header = {"system", "goal", "breach", "triggered"};
  for (const auto& e : report.entries) {
    std::string triggered;
    for (std::size_t i = 0; i < e.finding.triggered.size(); ++i) {
      if (i) triggered += "; ";
      triggered += token(e.finding.triggered[i].party);
      triggered += '(';
      triggered += token(e.finding.triggered[i].severity.impact);
      triggered += ')';
    }
    table.rows.push_back(
        {std::string(token(e.system)), std::string(token(e.goal)),
         e.finding.level ? std::string(token(*e.finding.level)) : "-",
         triggered});
  }

  if (format == RenderFormat::csv) return to_csv(table);

  std::ostringstream os;
  os << "coalition: " << coalition_text(report.coalition) << "\n";
  os << "conditions:";
  for (Condition c : all_conditions()) {
    os << ' ' << token(c) << '=' << (report.env.value(c) ? "true" : "false");
  }
  os << "\n\n" << to_markdown(table);
  return os.str();
}

std::string render_coalitions(System system, Goal goal, Impact level,
                              std::span<const Coalition> coalitions,
                              RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["system"] = token(system);
    doc["goal"] = token(goal);
    doc["level"] = token(level);
    ordered_json arr = ordered_json::array();
    for (const Coalition& c : coalitions) {
      ordered_json parties = ordered_json::array();
      for (Party p : c.parties) parties.push_back(token(p));
      arr.push_back(std::move(parties));
    }
    doc["minimal_coalitions"] = std::move(arr);
    return dump(doc);
  }
  if (format == RenderFormat::csv) {
    TextTable table;
    table.header = {"coalition", "party"};
    for (std::size_t i = 0; i < coalitions.size(); ++i) {
      for (Party p : coalitions[i].parties) {
        table.rows.push_back({std::to_string(i + 1), std::string(token(p))});
      }
    }
    return to_csv(table);
  }
  std::ostringstream os;
  os << "minimal coalitions breaching " << token(goal) << " of "
     << token(system) << " at level >= " << token(level) << ":\n";
  if (coalitions.empty()) os << "  (none)\n";
  for (std::size_t i = 0; i < coalitions.size(); ++i) {
    os << "  " << (i + 1) << ". " << coalition_text(coalitions[i]) << "\n";
  }
  return os.str();
}

std::string render_resilience(System system,
                              std::span<const ResilienceEntry> entries,
                              RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    doc["system"] = token(system);
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json j;
      j["goal"] = token(e.goal);
      for (Impact level : all_impacts()) {
        auto v = e.at(level);
        j[std::string(token(level))] =
            v ? ordered_json(*v) : ordered_json(nullptr);
      }
      arr.push_back(std::move(j));
    }
    doc["resilience"] = std::move(arr);
    return dump(doc);
  }
  TextTable table;
  table.header = {"goal", "single", "subset", "all"};
  for (const auto& e : entries) {
    std::vector<std::string> row{std::string(token(e.goal))};
    for (Impact level : all_impacts()) {
      auto v = e.at(level);
      row.push_back(v ? std::to_string(*v) : "-");
    }
    table.rows.push_back(std::move(row));
  }
  return render_table(table, format);
}

std::string render_delta(const DeltaReport& delta, RenderFormat format) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    ordered_json removed = ordered_json::array();
    for (const CellRef& r : delta.removed) {
      ordered_json j;
      j["system"] = token(r.system);
      j["goal"] = token(r.goal);
      j["party"] = token(r.party);
      removed.push_back(std::move(j));
    }
    doc["removed"] = std::move(removed);
    ordered_json profiles = ordered_json::array();
    for (const auto& p : delta.profiles) {
      ordered_json j;
      j["system"] = token(p.system);
      j["goal"] = token(p.goal);
      j["total"] = {{"before", p.before.total}, {"after", p.after.total}};
      j["all"] = {{"before", p.before.count(Impact::all)},
                  {"after", p.after.count(Impact::all)}};
      j["subset"] = {{"before", p.before.count(Impact::subset)},
                     {"after", p.after.count(Impact::subset)}};
      j["single"] = {{"before", p.before.count(Impact::single)},
                     {"after", p.after.count(Impact::single)}};
      profiles.push_back(std::move(j));
    }
    doc["profiles"] = std::move(profiles);
    ordered_json ranks = ordered_json::array();
    for (const auto& r : delta.ranks) {
      ordered_json j;
      j["goal"] = token(r.goal);
      j["before"] = json_rank_entries(r.before);
      j["after"] = json_rank_entries(r.after);
      ranks.push_back(std::move(j));
    }
    doc["ranks"] = std::move(ranks);
    return dump(doc);
  }

  TextTable table;
  table.header = {"system", "goal",   "total",  "all",
                  "subset", "single", "change"};
  for (const auto& p : delta.profiles) {
    auto pair = [](long long before, long long after) {
      return std::to_string(before) + "->" + std::to_string(after);
    };
    table.rows.push_back(
        {std::string(token(p.system)), std::string(token(p.goal)),
         pair(p.before.total, p.after.total),
         pair(p.before.count(Impact::all), p.after.count(Impact::all)),
         pair(p.before.count(Impact::subset), p.after.count(Impact::subset)),
         pair(p.before.count(Impact::single), p.after.count(Impact::single)),
         std::to_string(p.after.total - p.before.total)});
  }
  if (format == RenderFormat::csv) return to_csv(table);

  std::ostringstream os;
  os << "removed cells:\n";
  if (delta.removed.empty()) os << "  (none)\n";
  for (const CellRef& r : delta.removed) {
    os << "  " << token(r.system) << " / " << token(r.goal) << " / "
       << token(r.party) << "\n";
  }
  os << "\nprofile changes:\n" << to_markdown(table);
  for (const auto& r : delta.ranks) {
    os << "\nrank changes for " << token(r.goal) << ":\n";
    auto line = [&](const char* label, std::span<const RankEntry> entries) {
      os << "  " << label << ":";
      for (const RankEntry& e : entries) {
        os << ' ' << token(e.system) << '(' << e.score.str() << ')';
      }
      os << "\n";
    };
    line("before", r.before);
    line("after", r.after);
  }
  return os.str();
}

std::string render_claims(const ClaimReport& report, RenderFormat format,
                          bool use_color) {
  if (format == RenderFormat::json) {
    ordered_json doc;
    ordered_json arr = ordered_json::array();
    for (const ClaimOutcome& o : report.outcomes) {
      ordered_json j;
      j["id"] = o.claim.id;
      j["goal"] = token(o.claim.goal);
      j["predicate"] = token(o.claim.predicate);
      j["system"] = token(o.claim.system);
      if (o.claim.level) j["level"] = token(*o.claim.level);
      if (o.claim.expected) j["expected"] = *o.claim.expected;
      if (o.computed) j["computed"] = *o.computed;
      j["status"] = o.status == ClaimStatus::pass     ? "pass"
                    : o.status == ClaimStatus::fail   ? "fail"
                                                      : "not_evaluable";
      j["description"] = o.claim.description;
      if (!o.note.empty()) j["note"] = o.note;
      arr.push_back(std::move(j));
    }
    doc["claims"] = std::move(arr);
    doc["passed"] = report.outcomes.size() - report.failures() -
                    report.not_evaluable();
    doc["failed"] = report.failures();
    doc["not_evaluable"] = report.not_evaluable();
    return dump(doc);
  }

  if (format == RenderFormat::csv) {
    TextTable table;
    table.header = {"status",   "id",       "goal",     "predicate",
                    "system",   "level",    "computed", "expected",
                    "description", "note"};
    for (const ClaimOutcome& o : report.outcomes) {
      table.rows.push_back(
          {o.status == ClaimStatus::pass   ? "pass"
           : o.status == ClaimStatus::fail ? "fail"
                                           : "not_evaluable",
           o.claim.id, std::string(token(o.claim.goal)),
           std::string(token(o.claim.predicate)),
           std::string(token(o.claim.system)),
           o.claim.level ? std::string(token(*o.claim.level)) : "",
           o.computed ? std::to_string(*o.computed) : "",
           o.claim.expected ? std::to_string(*o.claim.expected) : "",
           o.claim.description, o.note});
    }
    return to_csv(table);
  }

  std::ostringstream os;
  for (const ClaimOutcome& o : report.outcomes) {
    std::string status = o.status == ClaimStatus::pass   ? "PASS"
                         : o.status == ClaimStatus::fail ? "FAIL"
                                                         : "SKIP";
    if (use_color) {
      const char* color = o.status == ClaimStatus::pass   ? "\x1b[32m"
                          : o.status == ClaimStatus::fail ? "\x1b[31m"
                                                          : "\x1b[33m";
      os << color << status << "\x1b[0m";
    } else {
      os << status;
    }
    os << ' ' << o.claim.id << " [" << token(o.claim.goal) << "] "
       << token(o.claim.predicate) << '(' << token(o.claim.system);
    if (o.claim.level) os << ", " << token(*o.claim.level);
    os << ')';
    if (o.computed) os << " = " << *o.computed;
    if (o.claim.expected) os << " (expected " << *o.claim.expected << ')';
    os << " -- \"" << o.claim.description << "\"";
    if (!o.note.empty()) os << " [" << o.note << "]";
    os << "\n";
  }
  os << "\n"
     << (report.outcomes.size() - report.failures() - report.not_evaluable())
     << " passed, " << report.failures() << " failed, "
     << report.not_evaluable() << " not evaluable\n";
  return os.str();
}

}  // namespace vtm::cli
