#include "hrt/model.hpp"

#include <algorithm>

namespace hrt {

const FlowField* FlowType::find_field(std::string_view n) const {
  for (const auto& f : fields) {
    if (f.name == n) return &f;
  }
  return nullptr;
}

bool flow_subset(const FlowType& a, const FlowType& b) {
  return std::all_of(a.fields.begin(), a.fields.end(), [&](const FlowField& f) {
    const FlowField* g = b.find_field(f.name);
    return g != nullptr && g->kind == f.kind;
  });
}

const SignalDef* Protocol::find_signal(std::string_view n) const {
  for (const auto& s : signals) {
    if (s.name == n) return &s;
  }
  return nullptr;
}

Protocol protocol_conjugate(const Protocol& p) {
  Protocol q = p;
  for (auto& s : q.signals) {
    s.dir = s.dir == SignalDir::In ? SignalDir::Out : SignalDir::In;
  }
  return q;
}

const StateDef* StateMachineDef::find_state(std::string_view name) const {
  for (const auto& s : states) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

const PortDef* find_port_in(const std::vector<PortDef>& ports,
                            std::string_view n) {
  for (const auto& p : ports) {
    if (p.name == n) return &p;
  }
  return nullptr;
}

}  // namespace

const PortDef* CapsuleDef::find_port(std::string_view n) const {
  return find_port_in(ports, n);
}

const PortDef* StreamerDef::find_port(std::string_view n) const {
  return find_port_in(ports, n);
}

const SignalDef* ModelDefinition::find_signal_of_port(
    const PortDef& port, std::string_view signal) const {
  if (port.kind != PortKind::Signal || port.type == kNoDef) return nullptr;
  return protocol(port.type).find_signal(signal);
}

bool ModelDefinition::receives(const PortDef& port,
                               std::string_view signal) const {
  const SignalDef* s = find_signal_of_port(port, signal);
  if (s == nullptr) return false;
  // Base ports receive in-signals, conjugate ports receive out-signals.
  return port.polarity == SignalPolarity::Base ? s->dir == SignalDir::In
                                               : s->dir == SignalDir::Out;
}

bool ModelDefinition::sends(const PortDef& port, std::string_view signal) const {
  const SignalDef* s = find_signal_of_port(port, signal);
  if (s == nullptr) return false;
  return port.polarity == SignalPolarity::Base ? s->dir == SignalDir::Out
                                               : s->dir == SignalDir::In;
}

}  // namespace hrt
