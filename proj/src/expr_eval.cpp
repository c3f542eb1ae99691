#include <cmath>
#include <cstdint>
#include <string>

#include "galicurve/expr.hpp"

// Scalar and jet evaluation run one structural recursion templated on the
// arithmetic type. Since every jet operation computes its value lane with the
// plain double operation, eval_jet(e, t0).v == eval_scalar(e, t0) bit for bit.

namespace galicurve {
namespace {

template <typename T>
T lift(double c);

template <>
double lift<double>(double c) { return c; }

template <>
Jet3 lift<Jet3>(double c) { return Jet3::constant(c); }

double value_of(double x) { return x; }
double value_of(const Jet3& j) { return j.v; }

double div_checked(double a, double b, double epsilon) {
  if (std::abs(b) <= epsilon)
    raise(ErrorCode::DivisionByZero,
          "division by a value of magnitude " + std::to_string(std::abs(b)) +
              " (below epsilon " + std::to_string(epsilon) + ")");
  return a / b;
}

Jet3 div_checked(const Jet3& a, const Jet3& b, double epsilon) {
  return divide(a, b, epsilon);
}

double apply_func(FuncTag f, double x) {
  switch (f) {
    case FuncTag::Sin: return std::sin(x);
    case FuncTag::Cos: return std::cos(x);
    case FuncTag::Sinh: return std::sinh(x);
    case FuncTag::Cosh: return std::cosh(x);
    case FuncTag::Exp: return std::exp(x);
    case FuncTag::Log:
      if (!(x > 0.0))
        raise(ErrorCode::Domain,
              "log requires a positive argument, got " + std::to_string(x));
      return std::log(x);
    case FuncTag::Sqrt:
      if (x < 0.0)
        raise(ErrorCode::Domain,
              "sqrt requires a nonnegative argument, got " + std::to_string(x));
      return std::sqrt(x);
  }
  raise(ErrorCode::InvalidArgument, "unknown function tag");
}

Jet3 apply_func(FuncTag f, const Jet3& x) {
  switch (f) {
    case FuncTag::Sin: return sin(x);
    case FuncTag::Cos: return cos(x);
    case FuncTag::Sinh: return sinh(x);
    case FuncTag::Cosh: return cosh(x);
    case FuncTag::Exp: return exp(x);
    case FuncTag::Log: return log(x);
    case FuncTag::Sqrt: return sqrt(x);
  }
  raise(ErrorCode::InvalidArgument, "unknown function tag");
}

double pow_const(double x, double r) {
  if (!(x > 0.0))
    raise(ErrorCode::Domain,
          "pow with non-integer exponent requires a positive base, got " +
              std::to_string(x));
  return std::pow(x, r);
}

Jet3 pow_const(const Jet3& x, double r) { return pow(x, r); }

// Square-and-multiply from the most significant bit down; the jet and scalar
// instantiations perform the identical multiplication sequence.
template <typename T>
T ipow_positive(const T& base, std::uint64_t n) {
  int hi = 63;
  while (((n >> hi) & 1u) == 0u) --hi;
  T acc = base;
  for (int i = hi - 1; i >= 0; --i) {
    acc = acc * acc;
    if ((n >> i) & 1u) acc = acc * base;
  }
  return acc;
}

template <typename T>
T evaluate(const Expr& e, const T& t, const Bindings& bindings, double eps);

template <typename T>
T evaluate_pow(const Expr& e, const T& t, const Bindings& bindings, double eps) {
  T base = evaluate<T>(*e.a, t, bindings, eps);
  if (!depends_on_t(e.b)) {
    const double r = evaluate<double>(*e.b, 0.0, bindings, eps);
    const double rounded = std::nearbyint(r);
    if (std::abs(r - rounded) <= 1e-12 && std::abs(rounded) <= 9.0e15) {
      // Integer exponent: repeated Leibniz multiplication, any base allowed.
      const auto n = static_cast<std::int64_t>(rounded);
      if (n == 0) return lift<T>(1.0);
      T p = ipow_positive(base, static_cast<std::uint64_t>(n < 0 ? -n : n));
      if (n > 0) return p;
      return div_checked(lift<T>(1.0), p, eps);
    }
    return pow_const(base, r);
  }
  // General exponent: x^y = exp(y log x), defined for x > 0.
  T expo = evaluate<T>(*e.b, t, bindings, eps);
  if (!(value_of(base) > 0.0))
    raise(ErrorCode::Domain,
          "x^y with a t-dependent exponent requires x > 0, got x = " +
              std::to_string(value_of(base)));
  return apply_func(FuncTag::Exp, expo * apply_func(FuncTag::Log, base));
}

template <typename T>
T evaluate(const Expr& e, const T& t, const Bindings& bindings, double eps) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return lift<T>(e.number);
    case Expr::Kind::Variable:
      return t;
    case Expr::Kind::Constant: {
      const auto it = bindings.find(e.name);
      if (it == bindings.end())
        raise(ErrorCode::UnboundConstant, "unbound constant '" + e.name + "'");
      return lift<T>(it->second);
    }
    case Expr::Kind::Neg:
      return -evaluate<T>(*e.a, t, bindings, eps);
    case Expr::Kind::Call:
      return apply_func(e.func, evaluate<T>(*e.a, t, bindings, eps));
    case Expr::Kind::Binary: {
      if (e.op == '^') return evaluate_pow<T>(e, t, bindings, eps);
      T lhs = evaluate<T>(*e.a, t, bindings, eps);
      T rhs = evaluate<T>(*e.b, t, bindings, eps);
      switch (e.op) {
        case '+': return lhs + rhs;
        case '-': return lhs - rhs;
        case '*': return lhs * rhs;
        case '/': return div_checked(lhs, rhs, eps);
        default: break;
      }
      raise(ErrorCode::InvalidArgument, "unknown binary operator");
    }
  }
  raise(ErrorCode::InvalidArgument, "malformed expression node");
}

}  // namespace

double eval_scalar(const ExprPtr& e, double t, const Bindings& b,
                   double jet_epsilon) {
  if (!e) raise(ErrorCode::InvalidArgument, "cannot evaluate a null expression");
  return evaluate<double>(*e, t, b, jet_epsilon);
}

Jet3 eval_jet(const ExprPtr& e, double t0, const Bindings& b,
              double jet_epsilon) {
  if (!e) raise(ErrorCode::InvalidArgument, "cannot evaluate a null expression");
  return evaluate<Jet3>(*e, Jet3::variable(t0), b, jet_epsilon);
}

}  // namespace galicurve
