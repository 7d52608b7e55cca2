#include "lexer.hpp"

#include <cctype>

namespace vtm::detail {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Lexer::Lexer(std::string_view src, std::string file,
             std::vector<ParseDiagnostic>& diags)
    : src_(src), file_(std::move(file)), diags_(&diags) {}

SourceSpan Lexer::here() const { return {file_, line_, column_}; }

void Lexer::error(const std::string& message, SourceSpan span) {
  diags_->push_back({DiagnosticSeverity::error, message, std::move(span)});
}

const Token& Lexer::peek() {
  if (!peeked_) {
    lookahead_ = lex();
    peeked_ = true;
  }
  return lookahead_;
}

Token Lexer::next() {
  if (peeked_) {
    peeked_ = false;
    return std::move(lookahead_);
  }
  return lex();
}

void Lexer::skip_space_and_comments() {
  while (pos_ < src_.size()) {
    char c = src_[pos_];
    if (c == '\n') {
      ++pos_;
      ++line_;
      column_ = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++pos_;
      ++column_;
    } else if (c == '#') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      if (!seen_token_ && header_comment_.empty()) {
        std::string_view comment = src_.substr(start, pos_ - start);
        while (comment.ends_with('\r')) comment.remove_suffix(1);
        header_comment_ = std::string(comment);
      }
      column_ += static_cast<int>(pos_ - start);
    } else {
      return;
    }
  }
}

Token Lexer::lex() {
  for (;;) {
    skip_space_and_comments();
    if (pos_ >= src_.size()) return {TokKind::end, "", 0, here()};

    SourceSpan span = here();
    char c = src_[pos_];

    switch (c) {
      case '{': ++pos_; ++column_; seen_token_ = true; return {TokKind::lbrace, "{", 0, span};
      case '}': ++pos_; ++column_; seen_token_ = true; return {TokKind::rbrace, "}", 0, span};
      case ';': ++pos_; ++column_; seen_token_ = true; return {TokKind::semicolon, ";", 0, span};
      case '=': ++pos_; ++column_; seen_token_ = true; return {TokKind::equals, "=", 0, span};
      case ',': ++pos_; ++column_; seen_token_ = true; return {TokKind::comma, ",", 0, span};
      default: break;
    }

    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
        ++pos_;
        ++column_;
      }
      seen_token_ = true;
      return {TokKind::ident, std::string(src_.substr(start, pos_ - start)), 0,
              span};
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long value = 0;
      bool overflow = false;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        if (value > 100000000) {
          overflow = true;
        } else {
          value = value * 10 + (src_[pos_] - '0');
        }
        ++pos_;
        ++column_;
      }
      if (overflow) {
        error("integer literal too large", span);
        value = 0;
      }
      seen_token_ = true;
      return {TokKind::integer, "", value, span};
    }

    if (c == '"') {
      ++pos_;
      ++column_;
      std::string text;
      bool terminated = false;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (d == '"') {
          ++pos_;
          ++column_;
          terminated = true;
          break;
        }
        if (d == '\n') break;  // strings do not span lines
        if (d == '\\' && pos_ + 1 < src_.size()) {
          char e = src_[pos_ + 1];
          if (e == '"' || e == '\\') {
            text += e;
          } else if (e == 'n') {
            text += '\n';
          } else if (e == 't') {
            text += '\t';
          } else {
            error(std::string("unknown escape '\\") + e + "' in string",
                  {file_, line_, column_});
            text += e;
          }
          pos_ += 2;
          column_ += 2;
          continue;
        }
        text += d;
        ++pos_;
        ++column_;
      }
      if (!terminated) error("unterminated string", span);
      seen_token_ = true;
      return {TokKind::string, std::move(text), 0, span};
    }

    error(std::string("unexpected character '") + c + "'", span);
    ++pos_;
    ++column_;
    // loop again for the next token
  }
}

}  // namespace vtm::detail
