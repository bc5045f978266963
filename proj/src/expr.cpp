#include "hrt/expr.hpp"

#include <cmath>
#include <utility>

namespace hrt {

std::string_view bin_op_text(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
  }
  return "?";
}

std::string_view builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Exp: return "exp";
    case Builtin::Abs: return "abs";
    case Builtin::Min: return "min";
    case Builtin::Max: return "max";
    case Builtin::Sqrt: return "sqrt";
  }
  return "?";
}

std::optional<Builtin> builtin_by_name(std::string_view name) {
  if (name == "sin") return Builtin::Sin;
  if (name == "cos") return Builtin::Cos;
  if (name == "exp") return Builtin::Exp;
  if (name == "abs") return Builtin::Abs;
  if (name == "min") return Builtin::Min;
  if (name == "max") return Builtin::Max;
  if (name == "sqrt") return Builtin::Sqrt;
  return std::nullopt;
}

int builtin_arity(Builtin b) {
  switch (b) {
    case Builtin::Min:
    case Builtin::Max:
      return 2;
    default:
      return 1;
  }
}

Expr Expr::lit(Value v) {
  Expr e;
  e.kind = Kind::Literal;
  e.literal = v;
  return e;
}

Expr Expr::var(std::string name) {
  Expr e;
  e.kind = Kind::Var;
  e.name = std::move(name);
  return e;
}

Expr Expr::field_ref(std::string port, std::string field) {
  Expr e;
  e.kind = Kind::Field;
  e.name = std::move(port);
  e.field = std::move(field);
  return e;
}

Expr Expr::clock() {
  Expr e;
  e.kind = Kind::Clock;
  return e;
}

Expr Expr::unary(UnOp op, Expr operand) {
  Expr e;
  e.kind = Kind::Unary;
  e.un = op;
  e.args.push_back(std::move(operand));
  return e;
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::Binary;
  e.bin = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::builtin_call(Builtin b, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Call;
  e.call = b;
  e.args = std::move(args);
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal:
      if (!(a.literal == b.literal)) return false;
      break;
    case Expr::Kind::Var:
      if (a.name != b.name) return false;
      break;
    case Expr::Kind::Field:
      if (a.name != b.name || a.field != b.field) return false;
      break;
    case Expr::Kind::Clock:
      break;
    case Expr::Kind::Unary:
      if (a.un != b.un) return false;
      break;
    case Expr::Kind::Binary:
      if (a.bin != b.bin) return false;
      break;
    case Expr::Kind::Call:
      if (a.call != b.call) return false;
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (!expr_equal(a.args[i], b.args[i])) return false;
  }
  return true;
}

namespace {

[[noreturn]] void type_error(const std::string& what) {
  throw EvalError("type error: " + what);
}

double require_numeric(const Value& v, const char* where) {
  if (!v.is_numeric()) {
    type_error(std::string(where) + " requires a numeric operand, got bool");
  }
  return v.to_real();
}

bool both_int(const Value& a, const Value& b) {
  return a.is_int() && b.is_int();
}

Value eval_binary(const Expr& e, const EvalEnv& env, const SimClock& clock);

Value eval_call(const Expr& e, const EvalEnv& env, const SimClock& clock) {
  const Builtin b = e.call;
  if (static_cast<int>(e.args.size()) != builtin_arity(b)) {
    throw EvalError(std::string(builtin_name(b)) + " expects " +
                    std::to_string(builtin_arity(b)) + " argument(s)");
  }
  const Value a0 = eval_expr(e.args[0], env, clock);
  switch (b) {
    case Builtin::Sin: return Value::real(std::sin(require_numeric(a0, "sin")));
    case Builtin::Cos: return Value::real(std::cos(require_numeric(a0, "cos")));
    case Builtin::Exp: return Value::real(std::exp(require_numeric(a0, "exp")));
    case Builtin::Sqrt:
      return Value::real(std::sqrt(require_numeric(a0, "sqrt")));
    case Builtin::Abs:
      if (a0.is_int()) return Value::integer(a0.as_int() < 0 ? -a0.as_int() : a0.as_int());
      return Value::real(std::fabs(require_numeric(a0, "abs")));
    case Builtin::Min:
    case Builtin::Max: {
      const Value a1 = eval_expr(e.args[1], env, clock);
      if (both_int(a0, a1)) {
        const auto x = a0.as_int(), y = a1.as_int();
        return Value::integer(b == Builtin::Min ? (x < y ? x : y)
                                                : (x > y ? x : y));
      }
      const double x = require_numeric(a0, "min/max");
      const double y = require_numeric(a1, "min/max");
      return Value::real(b == Builtin::Min ? std::fmin(x, y) : std::fmax(x, y));
    }
  }
  type_error("unknown builtin");
}

Value eval_binary(const Expr& e, const EvalEnv& env, const SimClock& clock) {
  // and/or short-circuit
  if (e.bin == BinOp::And || e.bin == BinOp::Or) {
    const Value lhs = eval_expr(e.args[0], env, clock);
    if (!lhs.is_bool()) type_error("and/or require bool operands");
    if (e.bin == BinOp::And && !lhs.as_bool()) return Value::boolean(false);
    if (e.bin == BinOp::Or && lhs.as_bool()) return Value::boolean(true);
    const Value rhs = eval_expr(e.args[1], env, clock);
    if (!rhs.is_bool()) type_error("and/or require bool operands");
    return rhs;
  }

  const Value lhs = eval_expr(e.args[0], env, clock);
  const Value rhs = eval_expr(e.args[1], env, clock);

  switch (e.bin) {
    case BinOp::Add:
      if (both_int(lhs, rhs)) return Value::integer(lhs.as_int() + rhs.as_int());
      return Value::real(require_numeric(lhs, "+") + require_numeric(rhs, "+"));
    case BinOp::Sub:
      if (both_int(lhs, rhs)) return Value::integer(lhs.as_int() - rhs.as_int());
      return Value::real(require_numeric(lhs, "-") - require_numeric(rhs, "-"));
    case BinOp::Mul:
      if (both_int(lhs, rhs)) return Value::integer(lhs.as_int() * rhs.as_int());
      return Value::real(require_numeric(lhs, "*") * require_numeric(rhs, "*"));
    case BinOp::Div:
      if (both_int(lhs, rhs)) {
        if (rhs.as_int() == 0) throw EvalError("integer division by zero");
        return Value::integer(lhs.as_int() / rhs.as_int());
      }
      // IEEE semantics: real division by zero yields an infinity.
      return Value::real(require_numeric(lhs, "/") / require_numeric(rhs, "/"));
    case BinOp::Eq:
    case BinOp::Ne: {
      bool eq;
      if (lhs.is_bool() || rhs.is_bool()) {
        if (!(lhs.is_bool() && rhs.is_bool())) {
          type_error("==/!= cannot compare bool with a number");
        }
        eq = lhs.as_bool() == rhs.as_bool();
      } else if (both_int(lhs, rhs)) {
        eq = lhs.as_int() == rhs.as_int();
      } else {
        eq = lhs.to_real() == rhs.to_real();
      }
      return Value::boolean(e.bin == BinOp::Eq ? eq : !eq);
    }
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge: {
      bool r;
      if (both_int(lhs, rhs)) {
        const auto x = lhs.as_int(), y = rhs.as_int();
        r = e.bin == BinOp::Lt   ? x < y
            : e.bin == BinOp::Le ? x <= y
            : e.bin == BinOp::Gt ? x > y
                                 : x >= y;
      } else {
        const double x = require_numeric(lhs, "comparison");
        const double y = require_numeric(rhs, "comparison");
        r = e.bin == BinOp::Lt   ? x < y
            : e.bin == BinOp::Le ? x <= y
            : e.bin == BinOp::Gt ? x > y
                                 : x >= y;
      }
      return Value::boolean(r);
    }
    default:
      type_error("unreachable binary operator");
  }
}

}  // namespace

Value eval_expr(const Expr& e, const EvalEnv& env, const SimClock& clock) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.literal;
    case Expr::Kind::Clock:
      return Value::real(clock.t);
    case Expr::Kind::Var: {
      if (auto v = env.lookup(e.name)) return *v;
      throw EvalError("unbound symbol '" + e.name + "'");
    }
    case Expr::Kind::Field: {
      if (auto v = env.lookup_field(e.name, e.field)) return *v;
      throw EvalError("unbound port field '" + e.name + "." + e.field + "'");
    }
    case Expr::Kind::Unary: {
      const Value v = eval_expr(e.args[0], env, clock);
      if (e.un == UnOp::Neg) {
        if (v.is_int()) return Value::integer(-v.as_int());
        return Value::real(-require_numeric(v, "unary -"));
      }
      if (!v.is_bool()) type_error("not requires a bool operand");
      return Value::boolean(!v.as_bool());
    }
    case Expr::Kind::Binary:
      return eval_binary(e, env, clock);
    case Expr::Kind::Call:
      return eval_call(e, env, clock);
  }
  throw EvalError("malformed expression node");
}

}  // namespace hrt
