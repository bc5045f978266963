#pragma once

#include <string>
#include <vector>

namespace hrt {

// 1-based line/column. end is exclusive on the column.
struct SourcePos {
  int line = 1;
  int col = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  std::string file;
  SourcePos start;
  SourcePos end;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

// Codes are a frozen contract (tests assert on them):
//   E001 lexical, E002 syntax
//   E-UNRESOLVED E-DUPLICATE E-SELFPART E-INITIAL E-DER E-OUTEQ E-SOLVER
//   E-AFTER E-SIGDIR E-ARITY E-PORTKIND E-SYSTEM E-SIMCFG          (resolve)
//   E-CONTAIN E-CAPSULE-DPORT E-FLOWTYPE E-FLOWDIR E-FANIN
//   E-RELAY-ARITY E-PROTOCOL E-ALGLOOP W-UNWIRED                   (validate)
//   E-STEP (run configuration), E-NONFINITE E-RTC-DIVERGE (runtime aborts)
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  SourceSpan span;
};

Diagnostic make_error(std::string code, std::string message, SourceSpan span);
Diagnostic make_warning(std::string code, std::string message, SourceSpan span);

bool has_errors(const std::vector<Diagnostic>& diags);

// One line per diagnostic: `file:line:col: severity[code]: message`,
// sorted by (file, line, col, code). Bit-exact; golden tests pin it.
std::string format_diagnostics(std::vector<Diagnostic> diags);

}  // namespace hrt
