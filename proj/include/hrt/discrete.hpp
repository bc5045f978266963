#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hrt/event.hpp"
#include "hrt/expr.hpp"
#include "hrt/model.hpp"
#include "hrt/trace.hpp"

namespace hrt {

// Run-to-completion state machine interpreter for one capsule instance.
// Confined to the discrete execution unit; dispatch is never reentered.

struct ArmedTimeout {
  double deadline = 0.0;
  std::int32_t transition = -1;   // the after-transition this timer serves
  std::int32_t owner_state = -1;  // cancelled when this state exits
  std::uint64_t arm_id = 0;
};

struct CapsuleRuntime {
  const ModelDefinition* model = nullptr;
  const CapsuleDef* def = nullptr;
  std::string path;
  std::vector<std::int32_t> active;  // root-to-leaf chain; empty if no machine
  std::map<std::string, Value> vars;
  std::vector<ArmedTimeout> timeouts;
  std::uint64_t emit_seq = 0;
  std::uint64_t next_arm_id = 0;
};

// Rows and emissions produced by one engine call. Emissions carry source and
// per-source sequence numbers; the scheduler routes them to their peers.
struct DispatchOutput {
  std::vector<TraceRecord> rows;
  std::vector<Event> emissions;
};

// Variables initialized at t=0, initial states entered outermost-first with
// entry actions run (they may send and raise; raises cascade immediately).
CapsuleRuntime init_capsule(const ModelDefinition& model, const CapsuleDef& def,
                            const std::string& path, const SimClock& clock,
                            DispatchOutput& out);

// Consumes one event to completion: innermost enabled transition fires (exit
// innermost-out, action, entry outermost-in), internal raises are processed
// to exhaustion before returning. No match: the event is dropped with a
// trace record. A cascade past 10000 steps aborts with E-RTC-DIVERGE.
void dispatch(CapsuleRuntime& rt, const Event& ev, const SimClock& clock,
              DispatchOutput& out);

struct DueTimeout {
  double deadline = 0.0;
  std::string instance;
  std::uint64_t arm_id = 0;
  std::int32_t transition = -1;
};

// Timeouts due at boundary t_k: deadline <= t_k (tiny relative guard absorbs
// float noise; deadlines snap to the first boundary at or past them).
std::vector<DueTimeout> due_timeouts(const CapsuleRuntime& rt, double t_k);

// Fires one armed timeout if it is still armed (an earlier firing at the same
// boundary may have exited its owner state and cancelled it).
void fire_timeout(CapsuleRuntime& rt, std::uint64_t arm_id,
                  const SimClock& clock, DispatchOutput& out);

}  // namespace hrt
