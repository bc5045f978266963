#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hrt/expr.hpp"
#include "hrt/value.hpp"

namespace hrt {

// Parse-stage model: names unresolved, spans everywhere. The printer in
// printer.hpp emits a canonical form that reparses to an equal AST.

struct AstField {
  std::string name;
  ScalarKind kind = ScalarKind::Real;
  SourceSpan span;
};

struct AstFlowType {
  std::string name;
  std::vector<AstField> fields;
  SourceSpan span;
};

struct AstSignal {
  std::string name;
  bool is_in = true;
  std::optional<std::string> payload;  // flow type name
  SourceSpan span;
};

struct AstProtocol {
  std::string name;
  std::vector<AstSignal> signals;
  SourceSpan span;
};

struct AstPort {
  std::string name;
  bool is_data = true;
  bool data_input = true;     // DPorts
  bool conjugated = false;    // SPorts
  std::string type_name;
  SourceSpan span;
};

struct AstPart {
  std::string name;
  std::string type_name;
  SourceSpan span;
};

struct AstEndpoint {
  std::optional<std::string> part;  // absent: own port
  std::string port;
  SourceSpan span;
};

struct AstConnector {
  enum class Kind { Flow, Relay, Bind };
  Kind kind = Kind::Flow;
  AstEndpoint source;
  std::vector<AstEndpoint> sinks;
  SourceSpan span;
};

struct AstAssign {
  std::string target;
  Expr rhs;
  SourceSpan span;
};

struct AstSend {
  std::string port;
  std::string signal;
  std::vector<Expr> args;
  SourceSpan span;
};

struct AstRaise {
  std::string signal;
  SourceSpan span;
};

using AstActionItem = std::variant<AstAssign, AstSend, AstRaise>;
using AstActionList = std::vector<AstActionItem>;

struct AstVar {
  std::string name;
  ScalarKind kind = ScalarKind::Real;
  Expr init;
  SourceSpan span;
};

struct AstTrigger {
  bool is_after = false;
  std::string signal;
  double after = 0.0;
  SourceSpan span;
};

struct AstState {
  std::string name;
  AstActionList entry;
  AstActionList exit;
  std::vector<AstState> children;
  std::vector<std::string> initial_marks;  // `initial X` lines at this level
  SourceSpan span;
};

struct AstTransition {
  std::string source;
  std::string target;
  AstTrigger trigger;
  std::optional<Expr> guard;
  AstActionList action;
  SourceSpan span;
};

struct AstStateMachine {
  std::vector<AstState> states;
  std::vector<std::string> initial_marks;
  std::vector<AstTransition> transitions;  // document order, any nesting
  SourceSpan span;
};

struct AstCapsule {
  std::string name;
  std::vector<AstPort> ports;
  std::vector<AstPart> parts;
  std::vector<AstConnector> connectors;
  std::vector<AstVar> locals;
  std::optional<AstStateMachine> machine;
  SourceSpan span;
};

struct AstParam {
  std::string name;
  double init = 0.0;
  SourceSpan span;
};

struct AstStateVar {
  std::string name;
  Expr init;
  SourceSpan span;
};

struct AstDerivative {
  std::string var;
  Expr rhs;
  SourceSpan span;
};

struct AstOutputEq {
  std::string port;
  std::string field;
  Expr rhs;
  SourceSpan span;
};

struct AstHandler {
  std::string signal;
  std::vector<AstAssign> assigns;
  SourceSpan span;
};

struct AstSolver {
  bool rk4 = false;
  double step = 0.0;
  SourceSpan span;
};

struct AstStreamer {
  std::string name;
  std::vector<AstPort> ports;
  std::vector<AstPart> parts;
  std::vector<AstConnector> connectors;
  std::vector<AstParam> params;
  std::vector<AstStateVar> state_vars;
  std::vector<AstDerivative> derivatives;
  std::vector<AstOutputEq> outputs;
  std::vector<AstHandler> handlers;
  std::optional<AstSolver> solver;
  SourceSpan span;
};

struct AstSystem {
  std::string name;
  std::vector<AstPart> parts;
  std::vector<AstConnector> connectors;
  SourceSpan span;
};

struct AstSimulation {
  std::optional<double> t_end;
  std::optional<double> step;
  std::optional<std::string> mode;
  std::optional<std::int64_t> decimation;
  SourceSpan span;
};

using AstDecl = std::variant<AstFlowType, AstProtocol, AstCapsule, AstStreamer,
                             AstSystem, AstSimulation>;

struct ModelAst {
  std::string file;
  std::vector<AstDecl> decls;
};

// Structural equality, spans ignored.
bool ast_equal(const ModelAst& a, const ModelAst& b);

}  // namespace hrt
