#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace hrt {

enum class ScalarKind { Real, Int, Bool };

std::string_view scalar_kind_name(ScalarKind k);

// Runtime scalar. Reals are IEEE binary64 end to end; everything downstream
// (trace bytes, mode equivalence) depends on never widening past double.
class Value {
 public:
  Value() : data_(0.0) {}

  static Value real(double v) { return Value(Data(v)); }
  static Value integer(std::int64_t v) { return Value(Data(v)); }
  static Value boolean(bool v) { return Value(Data(v)); }

  ScalarKind kind() const {
    switch (data_.index()) {
      case 0: return ScalarKind::Real;
      case 1: return ScalarKind::Int;
      default: return ScalarKind::Bool;
    }
  }

  bool is_real() const { return data_.index() == 0; }
  bool is_int() const { return data_.index() == 1; }
  bool is_bool() const { return data_.index() == 2; }
  bool is_numeric() const { return !is_bool(); }

  double as_real() const { return std::get<double>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }

  // Int promotes to Real; calling on a Bool is a caller bug.
  double to_real() const {
    return is_real() ? as_real() : static_cast<double>(as_int());
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.data_ == b.data_;
  }

 private:
  using Data = std::variant<double, std::int64_t, bool>;
  explicit Value(Data d) : data_(d) {}
  Data data_;
};

// Shortest decimal that round-trips to the same binary64 value.
std::string format_real(double v);

// Reals per format_real, ints in decimal, bools as true/false.
std::string format_value(const Value& v);

}  // namespace hrt
