#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hrt/value.hpp"

namespace hrt {

// Timestamped signal message. (t, source, seq) totally orders any event set;
// seq increases monotonically per source.
struct Event {
  double t = 0.0;
  std::string signal;
  std::vector<std::pair<std::string, Value>> payload;  // field name -> value
  std::string source;  // emitting instance path; "" for stimulus events
  std::uint64_t seq = 0;
  std::string target_inst;
  std::string target_port;  // "" for stimulus / internal events
};

// Stable delivery order: (t, source, seq).
bool event_order_lt(const Event& a, const Event& b);

// Engine-level failure: code E-NONFINITE, E-RTC-DIVERGE, E-EVAL, ...
struct SimAbort : std::runtime_error {
  SimAbort(std::string code_, double t_, std::string instance_,
           const std::string& detail);

  std::string code;
  double t = 0.0;
  std::string instance;
};

}  // namespace hrt
