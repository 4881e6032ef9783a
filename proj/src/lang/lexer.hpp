#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace modetab::lang {

enum class LexKind { Name, QuotedName, Var, Int, Float, Punct, End, Eof };

struct LexToken {
  LexKind kind;
  std::string text;
  std::int64_t int_value = 0;
  double float_value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  bool layout_before = false;  // whitespace or comment precedes the token
};

/// Splits source text into tokens. Comments are `% ...` and `/* ... */`.
std::vector<LexToken> lex(std::string_view text);

}  // namespace modetab::lang
