#include "hrt/value.hpp"

#include <charconv>
#include <system_error>

namespace hrt {

std::string_view scalar_kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::Real: return "real";
    case ScalarKind::Int: return "int";
    case ScalarKind::Bool: return "bool";
  }
  return "?";
}

std::string format_real(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_value(const Value& v) {
  switch (v.kind()) {
    case ScalarKind::Real:
      return format_real(v.as_real());
    case ScalarKind::Int: {
      char buf[24];
      auto res = std::to_chars(buf, buf + sizeof(buf), v.as_int());
      return std::string(buf, res.ptr);
    }
    case ScalarKind::Bool:
      return v.as_bool() ? "true" : "false";
  }
  return "?";
}

}  // namespace hrt
