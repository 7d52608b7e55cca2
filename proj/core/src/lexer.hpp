#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vtm/diagnostics.hpp"

namespace vtm::detail {

enum class TokKind {
  ident,
  integer,
  string,
  lbrace,
  rbrace,
  semicolon,
  equals,
  comma,
  end,
};

struct Token {
  TokKind kind = TokKind::end;
  std::string text;       // ident name or decoded string contents
  long long value = 0;    // for integer
  SourceSpan span;
};

// Tokenizer for the .vtm / .vts / claims line formats. '#' starts a comment
// running to end of line; CRLF input is accepted. Lexical problems are
// reported into the shared diagnostics list and skipped, so the parser keeps
// going and later errors still surface.
class Lexer {
 public:
  Lexer(std::string_view src, std::string file,
        std::vector<ParseDiagnostic>& diags);

  const Token& peek();
  Token next();

  // First comment line of the form "# vtm vN", if any; used for the format
  // version check.
  const std::string& header_comment() const { return header_comment_; }

 private:
  Token lex();
  void skip_space_and_comments();
  SourceSpan here() const;
  void error(const std::string& message, SourceSpan span);

  std::string_view src_;
  std::string file_;
  std::vector<ParseDiagnostic>* diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  bool peeked_ = false;
  Token lookahead_;
  std::string header_comment_;
  bool seen_token_ = false;
};

}  // namespace vtm::detail
