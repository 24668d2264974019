#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "argex/errors.hpp"

namespace argex::io::detail {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Colon, Tilde, Arrow, DoubleArrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Tokenizer shared by the text formats. `%` starts a comment that runs to
/// the end of the line; whitespace only separates tokens.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  [[nodiscard]] const Token& peek() const noexcept { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  Token expect(Tok kind, std::string_view what) {
    if (current_.kind != kind) fail(current_, "expected " + std::string(what) + ", found " + describe(current_));
    return next();
  }

  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
  }

 private:
  void advance() {
    skip_blank();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      current_.kind = k;
      current_.text = std::string(1, c);
      step();
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '.': return single(Tok::Dot);
      case ':': return single(Tok::Colon);
      case '~': return single(Tok::Tilde);
      case '-':
      case '=':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          current_.kind = c == '-' ? Tok::Arrow : Tok::DoubleArrow;
          current_.text = std::string(1, c) + ">";
          step();
          step();
          return;
        }
        break;
      default:
        break;
    }
    if (ident_char(c)) {
      current_.kind = Tok::Ident;
      while (pos_ < text_.size() && ident_char(text_[pos_])) {
        current_.text += text_[pos_];
        step();
      }
      return;
    }
    throw ParseError(line_, column_, "unexpected character '" + std::string(1, c) + "'");
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        step();
      } else {
        break;
      }
    }
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  static bool ident_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

}  // namespace argex::io::detail
