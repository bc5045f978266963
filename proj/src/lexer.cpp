#include "hrt/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>

namespace hrt {

namespace {

constexpr std::array kKeywords = {
    "flowtype", "protocol", "capsule",      "streamer", "system",
    "simulation", "part",   "var",          "statemachine", "initial",
    "state",    "entry",    "exit",         "transition", "on",
    "after",    "connect",  "relay",        "bind",     "dport",
    "sport",    "base",     "conj",         "param",    "der",
    "out",      "in",       "solver",       "euler",    "rk4",
    "step",     "send",     "raise",        "time",     "true",
    "false",    "and",      "or",           "not",      "real",
    "int",      "bool",
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_continue(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

bool is_keyword(std::string_view word) {
  for (const char* k : kKeywords) {
    if (word == k) return true;
  }
  return false;
}

LexResult lex(std::string_view source, std::string_view file) {
  LexResult result;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  auto here = [&]() { return SourcePos{line, col}; };
  auto advance = [&](size_t n) {
    for (size_t i = 0; i < n && pos < source.size(); ++i, ++pos) {
      if (source[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto span_from = [&](SourcePos start) {
    return SourceSpan{std::string(file), start, here()};
  };
  auto push = [&](TokenKind kind, SourcePos start, std::string text = {}) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.span = span_from(start);
    result.tokens.push_back(std::move(t));
  };

  while (pos < source.size()) {
    const char c = source[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && pos + 1 < source.size() && source[pos + 1] == '/') {
      while (pos < source.size() && source[pos] != '\n') advance(1);
      continue;
    }

    const SourcePos start = here();

    if (ident_start(c)) {
      size_t end = pos;
      while (end < source.size() && ident_continue(source[end])) ++end;
      std::string word(source.substr(pos, end - pos));
      advance(end - pos);
      push(is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident, start,
           std::move(word));
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t end = pos;
      bool is_real = false;
      while (end < source.size() &&
             std::isdigit(static_cast<unsigned char>(source[end])))
        ++end;
      if (end < source.size() && source[end] == '.' && end + 1 < source.size() &&
          std::isdigit(static_cast<unsigned char>(source[end + 1]))) {
        is_real = true;
        ++end;
        while (end < source.size() &&
               std::isdigit(static_cast<unsigned char>(source[end])))
          ++end;
      }
      if (end < source.size() && (source[end] == 'e' || source[end] == 'E')) {
        size_t exp = end + 1;
        if (exp < source.size() && (source[exp] == '+' || source[exp] == '-'))
          ++exp;
        if (exp < source.size() &&
            std::isdigit(static_cast<unsigned char>(source[exp]))) {
          is_real = true;
          end = exp;
          while (end < source.size() &&
                 std::isdigit(static_cast<unsigned char>(source[end])))
            ++end;
        }
      }
      const std::string_view text = source.substr(pos, end - pos);
      Token t;
      t.text = std::string(text);
      if (is_real) {
        t.kind = TokenKind::RealLit;
        std::from_chars(text.data(), text.data() + text.size(), t.real_value);
      } else {
        t.kind = TokenKind::IntLit;
        auto [p, ec] =
            std::from_chars(text.data(), text.data() + text.size(), t.int_value);
        if (ec != std::errc{}) {
          advance(end - pos);
          result.diagnostics.push_back(make_error(
              "E001", "integer literal out of range", span_from(start)));
          return result;
        }
      }
      advance(end - pos);
      t.span = span_from(start);
      result.tokens.push_back(std::move(t));
      continue;
    }

    auto two = [&](char a, char b) {
      return c == a && pos + 1 < source.size() && source[pos + 1] == b;
    };

    if (two('-', '>')) { advance(2); push(TokenKind::Arrow, start); continue; }
    if (c == '<' && pos + 2 < source.size() && source[pos + 1] == '-' &&
        source[pos + 2] == '>') {
      advance(3);
      push(TokenKind::BiArrow, start);
      continue;
    }
    if (two(':', '=')) { advance(2); push(TokenKind::Assign, start); continue; }
    if (two('=', '=')) { advance(2); push(TokenKind::EqEq, start); continue; }
    if (two('!', '=')) { advance(2); push(TokenKind::Ne, start); continue; }
    if (two('<', '=')) { advance(2); push(TokenKind::Le, start); continue; }
    if (two('>', '=')) { advance(2); push(TokenKind::Ge, start); continue; }

    TokenKind kind;
    switch (c) {
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ':': kind = TokenKind::Colon; break;
      case ';': kind = TokenKind::Semicolon; break;
      case ',': kind = TokenKind::Comma; break;
      case '.': kind = TokenKind::Dot; break;
      case '=': kind = TokenKind::Equals; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '<': kind = TokenKind::Lt; break;
      case '>': kind = TokenKind::Gt; break;
      default: {
        advance(1);
        result.diagnostics.push_back(make_error(
            "E001",
            "unexpected character '" + std::string(1, c) + "'",
            span_from(start)));
        return result;
      }
    }
    advance(1);
    push(kind, start);
  }

  push(TokenKind::End, here());
  return result;
}

}  // namespace hrt
