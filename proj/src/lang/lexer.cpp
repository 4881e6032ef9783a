#include "lexer.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "modetab/error.hpp"

namespace modetab::lang {
namespace {

bool symbol_char(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '\\': case '^': case '<':
    case '>': case '=': case '~': case ':': case '.': case '?': case '@':
    case '#': case '&': case '$':
      return true;
    default:
      return false;
  }
}

bool alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<LexToken> run() {
    std::vector<LexToken> out;
    for (;;) {
      bool layout = skip_layout();
      LexToken tok;
      tok.line = line_;
      tok.column = col_;
      tok.layout_before = layout;
      if (pos_ >= text_.size()) {
        tok.kind = LexKind::Eof;
        out.push_back(tok);
        return out;
      }
      read(tok);
      out.push_back(std::move(tok));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }

  bool skip_layout() {
    bool any = false;
    for (;;) {
      char c = peek();
      if (c == '\0' && pos_ >= text_.size()) return any;
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        any = true;
      } else if (c == '%') {
        while (pos_ < text_.size() && peek() != '\n') advance();
        any = true;
      } else if (c == '/' && peek(1) == '*') {
        advance();
        advance();
        while (pos_ < text_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= text_.size()) fail("unterminated block comment");
        advance();
        advance();
        any = true;
      } else {
        return any;
      }
    }
  }

  void read(LexToken& tok) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return read_number(tok);
    if (c == '_' || std::isupper(static_cast<unsigned char>(c))) {
      tok.kind = LexKind::Var;
      while (pos_ < text_.size() && alnum(peek())) tok.text += advance();
      return;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      tok.kind = LexKind::Name;
      while (pos_ < text_.size() && alnum(peek())) tok.text += advance();
      return;
    }
    if (c == '\'') return read_quoted(tok);
    if (c == '(' || c == ')' || c == ',' || c == '|' || c == ']') {
      tok.kind = LexKind::Punct;
      tok.text = std::string(1, advance());
      return;
    }
    if (c == '[') {
      advance();
      if (peek() == ']') {
        advance();
        tok.kind = LexKind::Name;
        tok.text = "[]";
        return;
      }
      fail("lists are not supported");
    }
    if (c == '!' || c == ';') {
      tok.kind = LexKind::Name;
      tok.text = std::string(1, advance());
      return;
    }
    if (c == '.') {
      char n = peek(1);
      if (n == '\0' || n == '%' || std::isspace(static_cast<unsigned char>(n))) {
        advance();
        tok.kind = LexKind::End;
        tok.text = ".";
        return;
      }
    }
    if (symbol_char(c)) {
      tok.kind = LexKind::Name;
      while (pos_ < text_.size() && symbol_char(peek())) {
        // a trailing '.' before layout ends the clause
        if (peek() == '.') {
          char n = peek(1);
          if (n == '\0' || n == '%' || std::isspace(static_cast<unsigned char>(n))) break;
        }
        tok.text += advance();
      }
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void read_quoted(LexToken& tok) {
    advance();
    tok.kind = LexKind::QuotedName;
    for (;;) {
      if (pos_ >= text_.size()) fail("unterminated quoted atom");
      char c = advance();
      if (c == '\'') {
        if (peek() == '\'') {
          tok.text += advance();
          continue;
        }
        return;
      }
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("unterminated quoted atom");
        char e = advance();
        switch (e) {
          case 'n': tok.text += '\n'; break;
          case 't': tok.text += '\t'; break;
          default: tok.text += e; break;
        }
        continue;
      }
      tok.text += c;
    }
  }

  void read_number(LexToken& tok) {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    bool is_float = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      is_float = true;
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t k = 1;
      if (peek(1) == '+' || peek(1) == '-') k = 2;
      if (std::isdigit(static_cast<unsigned char>(peek(k)))) {
        is_float = true;
        for (std::size_t i = 0; i < k; ++i) advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
    }
    tok.text = std::string(text_.substr(start, pos_ - start));
    if (is_float) {
      tok.kind = LexKind::Float;
      tok.float_value = std::strtod(tok.text.c_str(), nullptr);
    } else {
      tok.kind = LexKind::Int;
      auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                                     tok.int_value);
      if (ec != std::errc()) fail("integer literal out of range: " + tok.text);
    }
    if (alnum(peek())) fail("malformed number");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<LexToken> lex(std::string_view text) { return Lexer(text).run(); }

}  // namespace modetab::lang
