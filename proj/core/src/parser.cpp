#include "vtm/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "lexer.hpp"

namespace vtm {

namespace {

using detail::Lexer;
using detail::TokKind;
using detail::Token;

std::string quoted(std::string_view s) {
  std::string out = "'";
  out += s;
  out += "'";
  return out;
}

class ModelParser {
 public:
  ParseResult run(std::span<const SourceFile> files) {
    for (const auto& file : files) parse_file(file);
    resolve_note_refs();

    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (has_errors(result.diagnostics)) return result;

    std::string origin = files.empty() ? "<model>" : files.front().name;
    ParseResult created = TrustModel::create(std::move(data_), origin);
    // The parser already enforces every model invariant, so construction
    // does not fail here; keep its diagnostics if it ever does.
    for (auto& d : created.diagnostics)
      result.diagnostics.push_back(std::move(d));
    if (!has_errors(result.diagnostics))
      result.model = std::move(created.model);
    return result;
  }

 private:
  void error(std::string msg, SourceSpan span) {
    diags_.push_back({DiagnosticSeverity::error, std::move(msg),
                      std::move(span)});
  }

  void warning(std::string msg, SourceSpan span) {
    diags_.push_back({DiagnosticSeverity::warning, std::move(msg),
                      std::move(span)});
  }

  void parse_file(const SourceFile& file) {
    Lexer lexer(file.text, file.name, diags_);
    lexer_ = &lexer;

    for (;;) {
      const Token& t = lexer.peek();
      if (t.kind == TokKind::end) break;
      if (t.kind == TokKind::ident && t.text == "system") {
        parse_system();
      } else if (t.kind == TokKind::ident && t.text == "note") {
        parse_note();
      } else {
        error("expected 'system' or 'note', got " + describe(t), t.span);
        skip_to_top_level();
      }
    }

    check_header(lexer.header_comment(), file.name);
    lexer_ = nullptr;
  }

  void check_header(const std::string& header, const std::string& file_name) {
    if (header.empty()) return;
    std::string_view rest = header;
    rest.remove_prefix(1);  // '#'
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest[0])))
      rest.remove_prefix(1);
    if (!rest.starts_with("vtm")) return;
    rest.remove_prefix(3);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest[0])))
      rest.remove_prefix(1);
    if (rest != "v1") {
      warning("format header declares " + quoted(rest) +
                  "; this parser implements v1",
              {file_name, 1, 1});
    }
  }

  // --- grammar productions -------------------------------------------------

  void parse_system() {
    lexer_->next();  // 'system'
    const Token name = lexer_->next();
    std::optional<System> system;
    if (name.kind != TokKind::string) {
      error("expected quoted system name, got " + describe(name), name.span);
      skip_to_top_level();
      return;
    }
    system = system_from_display_name(name.text);
    if (!system) {
      error("unknown system name " + quoted(name.text), name.span);
    } else {
      data_.systems.push_back(*system);
    }
    if (!expect(TokKind::lbrace, "'{'")) {
      skip_to_top_level();
      return;
    }
    for (;;) {
      const Token& t = lexer_->peek();
      if (t.kind == TokKind::rbrace) {
        lexer_->next();
        return;
      }
      if (t.kind == TokKind::end) {
        error("unexpected end of input inside system block", t.span);
        return;
      }
      if (t.kind == TokKind::ident && t.text == "goal") {
        parse_goal(system);
      } else if (t.kind == TokKind::ident && t.text == "system") {
        error("expected 'goal' or '}' before 'system' (unclosed block?)",
              t.span);
        return;
      } else {
        error("expected 'goal' or '}', got " + describe(t), t.span);
        skip_until_ident_or_rbrace("goal");
      }
    }
  }

  void parse_goal(std::optional<System> system) {
    lexer_->next();  // 'goal'
    const Token name = lexer_->next();
    std::optional<Goal> goal;
    if (name.kind != TokKind::ident) {
      error("expected goal identifier, got " + describe(name), name.span);
    } else {
      goal = goal_from_token(name.text);
      if (!goal) error("unknown goal token " + quoted(name.text), name.span);
    }
    if (goal && system) data_.goals.push_back(*goal);
    if (!expect(TokKind::lbrace, "'{'")) {
      skip_until_ident_or_rbrace("goal");
      return;
    }
    for (;;) {
      const Token& t = lexer_->peek();
      if (t.kind == TokKind::rbrace) {
        lexer_->next();
        return;
      }
      if (t.kind == TokKind::end) {
        error("unexpected end of input inside goal block", t.span);
        return;
      }
      if (t.kind == TokKind::ident && t.text == "trust") {
        parse_cell(system, goal);
      } else if (t.kind == TokKind::ident &&
                 (t.text == "goal" || t.text == "system")) {
        error("expected 'trust' or '}' before '" + t.text +
                  "' (unclosed block?)",
              t.span);
        return;
      } else {
        error("expected 'trust' or '}', got " + describe(t), t.span);
        skip_until_ident_or_rbrace("trust");
      }
    }
  }

  void parse_cell(std::optional<System> system, std::optional<Goal> goal) {
    const Token keyword = lexer_->next();  // 'trust'
    const Token name = lexer_->next();
    std::optional<Party> party;
    if (name.kind != TokKind::ident) {
      error("expected party identifier, got " + describe(name), name.span);
    } else {
      party = party_from_token(name.text);
      if (!party) error("unknown party token " + quoted(name.text), name.span);
    }
    if (!expect(TokKind::lbrace, "'{'")) {
      skip_cell_body();
      return;
    }

    TrustAssumption cell;
    std::vector<std::pair<int, SourceSpan>> note_refs;
    bool valid = parse_cell_fields(cell, note_refs);

    if (!expect(TokKind::rbrace, "'}'")) {
      skip_cell_body();
      valid = false;
    }

    if (!valid || !party || !system || !goal) return;

    cell.system = *system;
    cell.goal = *goal;
    cell.party = *party;

    auto key = std::tuple{index_of(*system), index_of(*goal),
                          index_of(*party)};
    if (!cells_.insert(key).second) {
      std::ostringstream os;
      os << "duplicate cell (" << token(*system) << ", " << token(*goal)
         << ", " << token(*party) << ")";
      error(os.str(), keyword.span);
      return;
    }
    for (auto& ref : note_refs) note_refs_.push_back(std::move(ref));
    data_.assumptions.push_back(std::move(cell));
  }

  // impact is required and first; mode, notes and rationale are optional and
  // must appear in that order.
  bool parse_cell_fields(TrustAssumption& cell,
                         std::vector<std::pair<int, SourceSpan>>& note_refs) {
    const Token& first = lexer_->peek();
    if (!(first.kind == TokKind::ident && first.text == "impact")) {
      error("expected 'impact', got " + describe(first), first.span);
      return false;
    }
    lexer_->next();
    if (!expect(TokKind::equals, "'='")) return false;
    const Token level = lexer_->next();
    if (level.kind != TokKind::ident) {
      error("expected impact level, got " + describe(level), level.span);
      return false;
    }
    auto impact = impact_from_token(level.text);
    if (!impact) {
      error("unknown impact token " + quoted(level.text), level.span);
      return false;
    }
    cell.severity.impact = *impact;
    cell.severity.mode = TrustMode::full;  // default
    if (!expect(TokKind::semicolon, "';'")) return false;

    int stage = 0;  // 0 = before mode, 1 = before notes, 2 = before rationale
    for (;;) {
      const Token& t = lexer_->peek();
      if (t.kind != TokKind::ident) return true;  // '}' or error handled above
      if (t.text == "mode" && stage < 1) {
        lexer_->next();
        stage = 1;
        if (!expect(TokKind::equals, "'='")) return false;
        const Token m = lexer_->next();
        if (m.kind != TokKind::ident) {
          error("expected trust mode, got " + describe(m), m.span);
          return false;
        }
        auto mode = mode_from_token(m.text);
        if (!mode) {
          error("unknown mode token " + quoted(m.text), m.span);
          return false;
        }
        cell.severity.mode = *mode;
        if (!expect(TokKind::semicolon, "';'")) return false;
      } else if (t.text == "notes" && stage < 2) {
        lexer_->next();
        stage = 2;
        if (!expect(TokKind::equals, "'='")) return false;
        for (;;) {
          const Token id = lexer_->next();
          if (id.kind != TokKind::integer) {
            error("expected note id, got " + describe(id), id.span);
            return false;
          }
          if (id.value < 1) {
            error("note id must be positive", id.span);
            return false;
          }
          cell.notes.push_back(static_cast<int>(id.value));
          note_refs.emplace_back(static_cast<int>(id.value), id.span);
          const Token& sep = lexer_->peek();
          if (sep.kind == TokKind::comma) {
            lexer_->next();
            continue;
          }
          break;
        }
        if (!expect(TokKind::semicolon, "';'")) return false;
      } else if (t.text == "rationale" && stage < 3) {
        lexer_->next();
        stage = 3;
        if (!expect(TokKind::equals, "'='")) return false;
        const Token s = lexer_->next();
        if (s.kind != TokKind::string) {
          error("expected quoted rationale, got " + describe(s), s.span);
          return false;
        }
        cell.rationale = s.text;
        if (!expect(TokKind::semicolon, "';'")) return false;
      } else {
        error("unexpected field " + quoted(t.text) +
                  " (cell fields are impact, mode, notes, rationale, in "
                  "that order)",
              t.span);
        return false;
      }
    }
  }

  void parse_note() {
    lexer_->next();  // 'note'
    const Token id = lexer_->next();
    if (id.kind != TokKind::integer || id.value < 1) {
      error("expected positive note id, got " + describe(id), id.span);
      skip_past_semicolon();
      return;
    }
    const Token text = lexer_->next();
    if (text.kind != TokKind::string) {
      error("expected quoted note text, got " + describe(text), text.span);
      skip_past_semicolon();
      return;
    }
    ConditionNote note;
    note.id = static_cast<int>(id.value);
    note.text = text.text;
    const Token& t = lexer_->peek();
    if (t.kind == TokKind::ident && t.text == "when") {
      lexer_->next();
      const Token cond = lexer_->next();
      if (cond.kind != TokKind::ident) {
        error("expected condition identifier, got " + describe(cond),
              cond.span);
        skip_past_semicolon();
        return;
      }
      auto condition = condition_from_token(cond.text);
      if (!condition) {
        error("unknown condition token " + quoted(cond.text), cond.span);
        skip_past_semicolon();
        return;
      }
      note.voided_when = *condition;
    }
    if (!expect(TokKind::semicolon, "';'")) {
      skip_past_semicolon();
      return;
    }

    auto it = declared_notes_.find(note.id);
    if (it != declared_notes_.end()) {
      if (it->second == note) {
        warning("duplicate note " + std::to_string(note.id), id.span);
      } else {
        error("conflicting note " + std::to_string(note.id) +
                  ": already declared with different content",
              id.span);
      }
      return;
    }
    declared_notes_.emplace(note.id, note);
    data_.notes.push_back(std::move(note));
  }

  void resolve_note_refs() {
    for (const auto& [id, span] : note_refs_) {
      if (!declared_notes_.contains(id)) {
        error("undeclared note " + std::to_string(id), span);
      }
    }
  }

  // --- recovery helpers ----------------------------------------------------

  bool expect(TokKind kind, const char* what) {
    const Token& t = lexer_->peek();
    if (t.kind != kind) {
      error(std::string("expected ") + what + ", got " + describe(t), t.span);
      return false;
    }
    lexer_->next();
    return true;
  }

  void skip_to_top_level() {
    int depth = 0;
    for (;;) {
      const Token& t = lexer_->peek();
      if (t.kind == TokKind::end) return;
      if (depth == 0 && t.kind == TokKind::ident &&
          (t.text == "system" || t.text == "note")) {
        return;
      }
      if (t.kind == TokKind::lbrace) ++depth;
      if (t.kind == TokKind::rbrace && depth > 0) --depth;
      lexer_->next();
    }
  }

  void skip_until_ident_or_rbrace(std::string_view ident) {
    for (;;) {
      const Token& t = lexer_->peek();
      if (t.kind == TokKind::end || t.kind == TokKind::rbrace) return;
      if (t.kind == TokKind::ident && (t.text == ident || t.text == "goal" ||
                                       t.text == "system")) {
        return;
      }
      lexer_->next();
    }
  }

  void skip_cell_body() {
    for (;;) {
      const Token& t = lexer_->peek();
      if (t.kind == TokKind::end) return;
      if (t.kind == TokKind::rbrace) {
        lexer_->next();
        return;
      }
      if (t.kind == TokKind::ident &&
          (t.text == "trust" || t.text == "goal" || t.text == "system")) {
        return;
      }
      lexer_->next();
    }
  }

  void skip_past_semicolon() {
    for (;;) {
      const Token& t = lexer_->peek();
      if (t.kind == TokKind::end) return;
      if (t.kind == TokKind::semicolon) {
        lexer_->next();
        return;
      }
      if (t.kind == TokKind::ident &&
          (t.text == "system" || t.text == "note")) {
        return;
      }
      lexer_->next();
    }
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokKind::ident: return "'" + t.text + "'";
      case TokKind::integer: return "'" + std::to_string(t.value) + "'";
      case TokKind::string: return "quoted string";
      case TokKind::lbrace: return "'{'";
      case TokKind::rbrace: return "'}'";
      case TokKind::semicolon: return "';'";
      case TokKind::equals: return "'='";
      case TokKind::comma: return "','";
      case TokKind::end: return "end of input";
    }
    return "token";
  }

  Lexer* lexer_ = nullptr;
  ModelData data_;
  std::vector<ParseDiagnostic> diags_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> cells_;
  std::map<int, ConditionNote> declared_notes_;
  std::vector<std::pair<int, SourceSpan>> note_refs_;
};

}  // namespace

ParseResult parse_model(std::string_view text, std::string file_name) {
  SourceFile file{std::move(file_name), std::string(text)};
  return ModelParser{}.run(std::span<const SourceFile>(&file, 1));
}

ParseResult parse_model_files(std::span<const SourceFile> files) {
  return ModelParser{}.run(files);
}

}  // namespace vtm
