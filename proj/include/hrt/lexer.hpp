#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hrt/diagnostics.hpp"

namespace hrt {

enum class TokenKind {
  Ident,
  Keyword,
  IntLit,
  RealLit,
  // punctuation / operators
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Colon, Semicolon, Comma, Dot,
  Arrow,      // ->
  BiArrow,    // <->
  Assign,     // :=
  Equals,     // =
  Plus, Minus, Star, Slash,
  Lt, Le, Gt, Ge, EqEq, Ne,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;        // identifier/keyword spelling
  double real_value = 0.0;
  std::int64_t int_value = 0;
  SourceSpan span;
};

bool is_keyword(std::string_view word);

struct LexResult {
  std::vector<Token> tokens;  // ends with End on success
  std::vector<Diagnostic> diagnostics;
};

// UTF-8 text, `//` line comments. Emits E001 on a bad character or malformed
// number and stops at the first lexical error.
LexResult lex(std::string_view source, std::string_view file);

}  // namespace hrt
