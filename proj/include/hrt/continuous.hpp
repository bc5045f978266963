#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hrt/event.hpp"
#include "hrt/expr.hpp"
#include "hrt/lowering.hpp"
#include "hrt/model.hpp"
#include "hrt/trace.hpp"

namespace hrt {

// Solver-owned state of one streamer instance. Input/output caches are keyed
// by (port, field); unwired inputs hold the zero of their field kind.
struct StreamerRuntime {
  const ModelDefinition* model = nullptr;
  const StreamerDef* def = nullptr;
  std::string path;
  std::vector<double> x;  // parallel to def->state_vars
  std::map<std::string, double> params;
  std::map<std::pair<std::string, std::string>, Value> inputs;
  std::map<std::pair<std::string, std::string>, Value> outputs;
};

// State vector from initial-value expressions at t=0, params from their
// declared initial values, caches zeroed.
StreamerRuntime make_streamer_runtime(const ModelDefinition& model,
                                      const StreamerDef& def,
                                      const std::string& path);

// Topological order over the feedthrough graph (instance A precedes B when a
// wire feeds an input field that B's output equations reference). Ties break
// lexicographically by path. A cycle here means the validator was bypassed:
// aborts with E-ALGLOOP.
std::vector<std::string> build_eval_order(const InstanceTree& plan);

// One step of the configured method over dx/dt = f(x, u, params, t), inputs
// zero-order held across the step (rk4 stages included).
//   euler: x' = x + h*f(x, t)
//   rk4:   classical four stages at t, t+h/2, t+h/2, t+h
// Non-finite derivatives or states abort with E-NONFINITE.
void integrate_step(StreamerRuntime& rt, const SimClock& clock);

// Output equations against current x, u, params, time; cached in rt.outputs.
void eval_streamer_outputs(StreamerRuntime& rt, const SimClock& clock);

// Parameter-update handler for ev.signal; assignments apply in declaration
// order, the state vector stays untouched. Returns false when no handler
// exists (caller records the drop).
bool apply_signal(StreamerRuntime& rt, const Event& ev, const SimClock& clock);

}  // namespace hrt
