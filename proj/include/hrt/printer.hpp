#pragma once

#include <string>

#include "hrt/ast.hpp"

namespace hrt {

// Canonical source form: print(parse(s)) reparses to an AST equal to
// parse(s). Real literals always carry a '.' or exponent so they survive the
// round trip as reals.
std::string print_ast(const ModelAst& ast);

std::string print_expr(const Expr& e);

}  // namespace hrt
