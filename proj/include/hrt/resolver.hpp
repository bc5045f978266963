#pragma once

#include <optional>
#include <vector>

#include "hrt/ast.hpp"
#include "hrt/diagnostics.hpp"
#include "hrt/model.hpp"

namespace hrt {

struct ResolveResult {
  std::optional<ModelDefinition> model;  // present iff no errors
  std::vector<Diagnostic> diagnostics;
};

// Binds every name to exactly one declaration and enforces the construction
// invariants that make a ModelDefinition well-formed: unique names, one
// initial state per composite level, derivative/output-equation coverage,
// solver sanity, signal directions, reference scoping. Structural rules
// (containment, relay-only DPorts, flow typing, ...) stay in the validator.
ResolveResult resolve(const ModelAst& ast);

}  // namespace hrt
