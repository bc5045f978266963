#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hrt/ast.hpp"
#include "hrt/diagnostics.hpp"

namespace hrt {

struct ParseResult {
  std::optional<ModelAst> ast;  // present iff no errors
  std::vector<Diagnostic> diagnostics;
};

// Lex + parse. On failure at least one diagnostic (E001/E002) with a span and
// the expected-token set in the message.
ParseResult parse_model(std::string_view source, std::string_view file);

}  // namespace hrt
