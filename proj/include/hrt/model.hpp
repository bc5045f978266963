#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hrt/expr.hpp"
#include "hrt/value.hpp"

namespace hrt {

using DefId = std::int32_t;
inline constexpr DefId kNoDef = -1;

// ---------------------------------------------------------------------------
// Flow types and protocols
// ---------------------------------------------------------------------------

struct FlowField {
  std::string name;
  ScalarKind kind = ScalarKind::Real;
};

// Record type carried by a DPort. Connection legality is the subset relation
// below; field order is declaration order and does not affect it.
struct FlowType {
  std::string name;
  std::vector<FlowField> fields;

  const FlowField* find_field(std::string_view n) const;
};

// True iff every (name, kind) pair of a occurs in b. Structural, no numeric
// widening: {x: int} is not a subset of {x: real}.
bool flow_subset(const FlowType& a, const FlowType& b);

enum class SignalDir { In, Out };

struct SignalDef {
  std::string name;
  SignalDir dir = SignalDir::In;
  DefId payload = kNoDef;  // FlowType id or kNoDef
};

// Directions are written from the base port's perspective: a base port sends
// `out` signals and receives `in` signals; a conjugate port flips both.
struct Protocol {
  std::string name;
  std::vector<SignalDef> signals;

  const SignalDef* find_signal(std::string_view n) const;
};

// Same protocol with every signal direction flipped. Involution.
Protocol protocol_conjugate(const Protocol& p);

// ---------------------------------------------------------------------------
// Ports, parts, connectors
// ---------------------------------------------------------------------------

enum class PortKind { Data, Signal };
enum class DataDir { Input, Output };
enum class SignalPolarity { Base, Conjugate };

struct PortDef {
  std::string name;
  PortKind kind = PortKind::Data;
  DataDir data_dir = DataDir::Input;               // DPorts
  SignalPolarity polarity = SignalPolarity::Base;  // SPorts
  DefId type = kNoDef;  // FlowType id (DPort) or Protocol id (SPort)
  bool relay_only = false;  // forced true for DPorts owned by capsules
  SourceSpan span;
};

enum class PartKind { Capsule, Streamer };

struct PartDef {
  std::string name;
  PartKind kind = PartKind::Capsule;
  DefId def = kNoDef;
  SourceSpan span;
};

// part < 0 addresses a port of the enclosing definition itself.
struct PortRef {
  std::int32_t part = -1;
  std::int32_t port = 0;
  SourceSpan span;
};

enum class ConnectorKind { Flow, Relay, Bind };

struct Connector {
  ConnectorKind kind = ConnectorKind::Flow;
  PortRef source;              // Flow/Relay: data source. Bind: first end.
  std::vector<PortRef> sinks;  // Flow/Bind: exactly one. Relay: as written.
  SourceSpan span;
};

// ---------------------------------------------------------------------------
// Actions and state machines
// ---------------------------------------------------------------------------

struct AssignAction {
  std::string target;
  Expr rhs;
  SourceSpan span;
};

struct SendAction {
  std::int32_t port = 0;  // owning definition's SPort index
  std::string signal;
  std::vector<Expr> args;  // positional per the payload flow type
  SourceSpan span;
};

struct RaiseAction {
  std::string signal;  // internal event name
  SourceSpan span;
};

using ActionItem = std::variant<AssignAction, SendAction, RaiseAction>;
using ActionList = std::vector<ActionItem>;

struct TriggerDef {
  enum class Kind { Signal, After };
  Kind kind = Kind::Signal;
  std::string signal;      // Signal triggers (SPort in-signal or raised name)
  double after = 0.0;      // After triggers, seconds
  SourceSpan span;
};

struct StateDef {
  std::string name;
  std::int32_t parent = -1;  // -1: top level of the machine
  std::vector<std::int32_t> children;
  std::int32_t initial_child = -1;  // composite states only
  ActionList entry;
  ActionList exit;
  SourceSpan span;
};

struct TransitionDef {
  std::int32_t source = 0;
  std::int32_t target = 0;
  TriggerDef trigger;
  std::optional<Expr> guard;
  ActionList action;
  SourceSpan span;
};

struct StateMachineDef {
  std::vector<StateDef> states;            // document order
  std::vector<std::int32_t> top_states;    // parent == -1, document order
  std::int32_t initial_top = -1;
  std::vector<TransitionDef> transitions;  // document order

  const StateDef* find_state(std::string_view name) const;
};

// ---------------------------------------------------------------------------
// Capsules, streamers, system
// ---------------------------------------------------------------------------

struct LocalVar {
  std::string name;
  ScalarKind kind = ScalarKind::Real;
  Expr init;
  SourceSpan span;
};

// Discrete, event-driven. DPorts are relay-only; the state machine is the
// whole behavior.
struct CapsuleDef {
  std::string name;
  std::vector<PartDef> parts;
  std::vector<PortDef> ports;
  std::vector<Connector> connectors;
  std::vector<LocalVar> locals;
  std::optional<StateMachineDef> machine;
  SourceSpan span;

  const PortDef* find_port(std::string_view n) const;
};

enum class SolverMethod { Euler, Rk4 };

struct SolverSpec {
  SolverMethod method = SolverMethod::Euler;
  double step = 0.0;  // seconds, > 0
  SourceSpan span;
};

struct ParamDef {
  std::string name;
  double init = 0.0;
  SourceSpan span;
};

struct StateVarDef {
  std::string name;
  Expr init;
  SourceSpan span;
};

struct OutputEq {
  std::int32_t port = 0;  // output DPort index
  std::string field;
  Expr rhs;
  SourceSpan span;
};

struct HandlerDef {
  std::string signal;
  std::vector<AssignAction> assigns;  // parameter updates, applied in order
  SourceSpan span;
};

// Time-continuous. The solver advances the state vector each macro step,
// output equations feed the output DPorts, handlers apply parameter updates
// carried by incoming signals.
struct StreamerDef {
  std::string name;
  std::vector<PartDef> parts;  // sub-streamers (a capsule here is E-CONTAIN)
  std::vector<PortDef> ports;
  std::vector<Connector> connectors;
  SolverSpec solver;
  std::vector<ParamDef> params;
  std::vector<StateVarDef> state_vars;
  std::vector<Expr> derivatives;  // parallel to state_vars
  std::vector<OutputEq> outputs;
  std::vector<HandlerDef> handlers;
  SourceSpan span;

  const PortDef* find_port(std::string_view n) const;
};

struct SystemDef {
  std::string name;
  std::vector<PartDef> parts;
  std::vector<Connector> connectors;
  SourceSpan span;
};

enum class SimMode { Lockstep, Concurrent };

struct SimDefaults {
  std::optional<double> t_end;
  std::optional<double> step;
  std::optional<SimMode> mode;
  std::optional<std::int32_t> decimation;
};

// ---------------------------------------------------------------------------
// Resolved model
// ---------------------------------------------------------------------------

struct ModelDefinition {
  std::vector<FlowType> flow_types;
  std::vector<Protocol> protocols;
  std::vector<CapsuleDef> capsules;
  std::vector<StreamerDef> streamers;
  std::optional<SystemDef> system;
  SimDefaults defaults;
  std::string source_file;

  const FlowType& flow_type(DefId id) const { return flow_types.at(id); }
  const Protocol& protocol(DefId id) const { return protocols.at(id); }

  // Signals a port can receive / send given its polarity.
  bool receives(const PortDef& port, std::string_view signal) const;
  bool sends(const PortDef& port, std::string_view signal) const;
  const SignalDef* find_signal_of_port(const PortDef& port,
                                       std::string_view signal) const;
};

}  // namespace hrt
