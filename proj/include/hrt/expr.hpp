#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hrt/diagnostics.hpp"
#include "hrt/value.hpp"

namespace hrt {

// Global simulation clock. t advances only as k*h (never accumulated), so
// boundary stamps are bit-reproducible.
struct SimClock {
  double t = 0.0;
  double h = 0.0;
};

enum class BinOp { Add, Sub, Mul, Div, Lt, Le, Gt, Ge, Eq, Ne, And, Or };
enum class UnOp { Neg, Not };
enum class Builtin { Sin, Cos, Exp, Abs, Min, Max, Sqrt };

std::string_view bin_op_text(BinOp op);
std::string_view builtin_name(Builtin b);
std::optional<Builtin> builtin_by_name(std::string_view name);
int builtin_arity(Builtin b);

// Side-effect-free expression tree shared by guards, actions, and equations.
// Names stay symbolic; evaluation binds them through an EvalEnv.
struct Expr {
  enum class Kind { Literal, Var, Field, Clock, Unary, Binary, Call };

  Kind kind = Kind::Literal;
  Value literal;          // Literal
  std::string name;       // Var; Field: port name
  std::string field;      // Field
  UnOp un = UnOp::Neg;    // Unary
  BinOp bin = BinOp::Add; // Binary
  Builtin call = Builtin::Sin;  // Call
  std::vector<Expr> args;
  SourceSpan span;

  static Expr lit(Value v);
  static Expr var(std::string name);
  static Expr field_ref(std::string port, std::string field);
  static Expr clock();
  static Expr unary(UnOp op, Expr operand);
  static Expr binary(BinOp op, Expr lhs, Expr rhs);
  static Expr builtin_call(Builtin b, std::vector<Expr> args);
};

// Structural equality ignoring spans.
bool expr_equal(const Expr& a, const Expr& b);

class EvalEnv {
 public:
  virtual ~EvalEnv() = default;
  virtual std::optional<Value> lookup(std::string_view name) const = 0;
  virtual std::optional<Value> lookup_field(std::string_view port,
                                            std::string_view field) const = 0;
};

// Binds nothing; for expressions over literals and `time` only.
class EmptyEnv : public EvalEnv {
 public:
  std::optional<Value> lookup(std::string_view) const override { return std::nullopt; }
  std::optional<Value> lookup_field(std::string_view, std::string_view) const override {
    return std::nullopt;
  }
};

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic evaluation under {real: IEEE double, int, bool}.
// `time` evaluates to clock.t. Mixed int/real arithmetic promotes to real;
// int/int division truncates and raises EvalError on zero (real division by
// zero follows IEEE and yields an infinity). and/or short-circuit.
Value eval_expr(const Expr& e, const EvalEnv& env, const SimClock& clock);

}  // namespace hrt
