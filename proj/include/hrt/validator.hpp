#pragma once

#include <vector>

#include "hrt/diagnostics.hpp"
#include "hrt/model.hpp"

namespace hrt {

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  bool passed = false;  // true iff no error-severity diagnostics
};

// Streamers must not contain capsules (at any nesting depth). E-CONTAIN.
std::vector<Diagnostic> check_containment(const ModelDefinition& m);

// Capsule DPorts are relay ports: never referenced by guards/actions, each
// wired straight through exactly once. E-CAPSULE-DPORT.
std::vector<Diagnostic> check_capsule_dports(const ModelDefinition& m);

// Flow direction (E-FLOWDIR), source-subset-of-sink typing (E-FLOWTYPE),
// single-writer inputs (E-FANIN), relay arity of exactly two (E-RELAY-ARITY).
std::vector<Diagnostic> check_flow_connections(const ModelDefinition& m);

// Bindings join two SPorts of one protocol with opposite effective polarity,
// one binding per port. E-PROTOCOL.
std::vector<Diagnostic> check_signal_bindings(const ModelDefinition& m);

// Instantaneous dependency cycles through output equations and wires.
// Integrators break feedthrough. E-ALGLOOP. Requires flow connections valid.
std::vector<Diagnostic> check_algebraic_loops(const ModelDefinition& m);

// Input DPort fields with no incoming flow read 0.0 at runtime; flagged as
// W-UNWIRED so the silence stays visible.
std::vector<Diagnostic> check_unwired_inputs(const ModelDefinition& m);

// All checks in fixed order, diagnostics sorted as format_diagnostics sorts.
ValidationReport validate_all(const ModelDefinition& m);

}  // namespace hrt
