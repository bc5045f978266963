#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hrt {

enum class TraceKind { StateEnter, StateExit, Transition, Signal, Drop, Sample };

std::string_view trace_kind_name(TraceKind k);

struct TraceRecord {
  double t = 0.0;
  TraceKind kind = TraceKind::Sample;
  std::string instance;
  std::string detail;
};

// Deterministic simulation record. Byte-identical across runs and across
// execution modes for the same (plan, config, stimulus).
struct Trace {
  std::vector<TraceRecord> records;
  std::uint64_t boundaries = 0;

  // accounting: every emitted event is delivered or dropped, none vanish
  std::uint64_t emitted = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
};

// CSV, header `t,kind,instance,detail`, reals as shortest round-trip decimal.
std::string trace_to_csv(const Trace& trace);

}  // namespace hrt
