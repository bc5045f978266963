#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrt/event.hpp"
#include "hrt/lowering.hpp"
#include "hrt/model.hpp"
#include "hrt/trace.hpp"

namespace hrt {

struct SimConfig {
  double t_end = 0.0;
  double h = 0.01;
  SimMode mode = SimMode::Lockstep;
  std::int32_t decimation = 1;
};

// External event injected at the first boundary at or past t.
struct StimulusEvent {
  double t = 0.0;
  std::string instance;
  std::string signal;
  std::vector<Value> values;  // positional per the signal's payload fields
};

// CSV lines `t,instance,signal[,value...]`; '#' comments and blank lines
// skipped. Throws std::runtime_error on malformed input.
std::vector<StimulusEvent> parse_stimulus(std::string_view text);

// Steps n with n*h == t_end within 1 ulp per step; nullopt when t_end is not
// an exact multiple or the count leaves [1, 1e9].
std::optional<std::uint64_t> step_count(double t_end, double h);

// Removes every pending event stamped at or before t_k and returns them in
// delivery order (t, source, seq). Per-source (t, seq) monotonicity is
// asserted.
std::vector<Event> exchange_boundary(std::vector<Event>& pending, double t_k);

// Co-simulation master. Boundary loop at t_k = k*h (multiplied, never
// accumulated): deliver pending events in exchange order, fire due timeouts,
// evaluate continuous outputs, sample, then integrate to the next boundary.
// Newly emitted events always defer to the following boundary. Lockstep runs
// both units inline and defines the reference semantics; concurrent runs
// them on two threads over message channels and produces byte-identical
// traces. Aborts propagate as SimAbort.
Trace run_simulation(const InstanceTree& plan, const SimConfig& cfg,
                     const std::vector<StimulusEvent>& stimulus = {});

}  // namespace hrt
