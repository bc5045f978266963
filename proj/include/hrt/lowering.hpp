#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hrt/model.hpp"

namespace hrt {

// One resolved dataflow edge, capsule relay hops spliced out: the source is
// always a streamer output field, the sink a streamer input field.
struct WireEdge {
  std::string src_inst, src_port, src_field;
  std::string dst_inst, dst_port, dst_field;
};

// One resolved SPort pairing (stored once with ends ordered by path).
struct SignalRoute {
  std::string a_inst, a_port;
  std::string b_inst, b_port;
};

struct InstanceInfo {
  std::string path;  // '/'-separated, rooted at /<system name>
  PartKind kind = PartKind::Capsule;
  DefId def = kNoDef;
};

// Flattened execution plan: every instance with fully wired ports, the
// evaluation order of the continuous unit, and the discrete/continuous unit
// assignment (implied by kind: capsules discrete, streamers continuous).
struct InstanceTree {
  std::shared_ptr<const ModelDefinition> model;
  std::vector<InstanceInfo> instances;  // sorted by path
  std::vector<WireEdge> wires;          // sorted
  std::vector<SignalRoute> routes;      // sorted
  std::vector<std::string> eval_order;  // streamer paths, feedthrough-sorted

  const InstanceInfo* find(const std::string& path) const;
};

// Recursive part expansion from the model's system root. Precondition:
// validate_all passed and a system is declared; wiring breaches abort.
InstanceTree lower_to_plan(std::shared_ptr<const ModelDefinition> model);

// Canonical `hrtplan v1` document: stable key order, byte-stable across runs.
std::string emit_plan(const InstanceTree& plan);

// Graphviz text: clusters per container, circle nodes for DPorts, squares
// for SPorts, edges for flows/relays/bindings (pre-splice structure).
std::string emit_dot(const ModelDefinition& m);

}  // namespace hrt
