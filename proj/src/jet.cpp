#include "galicurve/jet.hpp"

#include <string>

namespace galicurve {

Jet3 operator+(const Jet3& a, const Jet3& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

Jet3 operator-(const Jet3& a, const Jet3& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

Jet3 operator-(const Jet3& a) { return {-a.v, -a.d1, -a.d2, -a.d3}; }

// Leibniz rule: (fg)''' = f'''g + 3f''g' + 3f'g'' + fg'''.
Jet3 operator*(const Jet3& a, const Jet3& b) {
  Jet3 r;
  r.v = a.v * b.v;
  r.d1 = a.d1 * b.v + a.v * b.d1;
  r.d2 = a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2;
  r.d3 = a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3;
  return r;
}

Jet3 operator*(const Jet3& a, double c) {
  return {a.v * c, a.d1 * c, a.d2 * c, a.d3 * c};
}

Jet3 divide(const Jet3& a, const Jet3& b, double epsilon) {
  if (std::abs(b.v) <= epsilon)
    raise(ErrorCode::DivisionByZero,
          "jet division by a value of magnitude " + std::to_string(std::abs(b.v)) +
              " (below epsilon " + std::to_string(epsilon) + ")");
  // Solve a = q*b for q order by order.
  Jet3 q;
  q.v = a.v / b.v;
  q.d1 = (a.d1 - q.v * b.d1) / b.v;
  q.d2 = (a.d2 - 2.0 * q.d1 * b.d1 - q.v * b.d2) / b.v;
  q.d3 = (a.d3 - 3.0 * q.d2 * b.d1 - 3.0 * q.d1 * b.d2 - q.v * b.d3) / b.v;
  return q;
}

Jet3 chain(double f0, double f1, double f2, double f3, const Jet3& g) {
  Jet3 r;
  r.v = f0;
  r.d1 = f1 * g.d1;
  r.d2 = f2 * g.d1 * g.d1 + f1 * g.d2;
  r.d3 = f3 * g.d1 * g.d1 * g.d1 + 3.0 * f2 * g.d1 * g.d2 + f1 * g.d3;
  return r;
}

Jet3 compose(const Jet3& f, const Jet3& g) {
  return chain(f.v, f.d1, f.d2, f.d3, g);
}

Jet3 invert_series(const Jet3& x, double t0, double epsilon) {
  if (std::abs(x.d1) <= epsilon)
    raise(ErrorCode::NonInvertible,
          "cannot invert a jet with first derivative of magnitude " +
              std::to_string(std::abs(x.d1)) + " (below epsilon " +
              std::to_string(epsilon) + ")");
  // t' = 1/x', t'' = -x''/x'^3, t''' = (3x''^2 - x'x''') / x'^5.
  const double u = 1.0 / x.d1;
  Jet3 r;
  r.v = t0;
  r.d1 = u;
  r.d2 = -x.d2 * u * u * u;
  r.d3 = (3.0 * x.d2 * x.d2 - x.d1 * x.d3) * u * u * u * u * u;
  return r;
}

Jet3 sin(const Jet3& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return chain(s, c, -s, -c, a);
}

Jet3 cos(const Jet3& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return chain(c, -s, -c, s, a);
}

Jet3 sinh(const Jet3& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return chain(s, c, s, c, a);
}

Jet3 cosh(const Jet3& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return chain(c, s, c, s, a);
}

Jet3 exp(const Jet3& a) {
  const double e = std::exp(a.v);
  return chain(e, e, e, e, a);
}

Jet3 log(const Jet3& a) {
  if (!(a.v > 0.0))
    raise(ErrorCode::Domain, "log requires a positive argument, got " + std::to_string(a.v));
  const double u = 1.0 / a.v;
  return chain(std::log(a.v), u, -u * u, 2.0 * u * u * u, a);
}

Jet3 sqrt(const Jet3& a) {
  if (!(a.v > 0.0))
    raise(ErrorCode::Domain,
          "sqrt of a jet requires a positive argument, got " + std::to_string(a.v));
  const double s = std::sqrt(a.v);
  const double f1 = 0.5 / s;
  const double f2 = -0.25 / (s * a.v);
  const double f3 = 0.375 / (s * a.v * a.v);
  return chain(s, f1, f2, f3, a);
}

Jet3 pow(const Jet3& a, double r) {
  if (!(a.v > 0.0))
    raise(ErrorCode::Domain,
          "pow with non-integer exponent requires a positive base, got " +
              std::to_string(a.v));
  const double p = std::pow(a.v, r);
  const double f1 = r * p / a.v;
  const double f2 = r * (r - 1.0) * p / (a.v * a.v);
  const double f3 = r * (r - 1.0) * (r - 2.0) * p / (a.v * a.v * a.v);
  return chain(p, f1, f2, f3, a);
}

}  // namespace galicurve
