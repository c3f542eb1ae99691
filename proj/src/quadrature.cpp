#include "galicurve/quadrature.hpp"

#include <cmath>
#include <string>

namespace galicurve {
namespace {

struct Workspace {
  const std::function<double(double)>& f;
  long evaluations = 0;
  double error_total = 0.0;

  double eval(double x) {
    ++evaluations;
    const double y = f(x);
    if (!std::isfinite(y))
      raise(ErrorCode::Domain,
            "integrand is not finite at x = " + std::to_string(x));
    return y;
  }
};

double simpson(double fa, double fm, double fb, double width) {
  return width / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(Workspace& ws, double a, double b, double fa, double fm,
              double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double flm = ws.eval(0.5 * (a + m));
  const double frm = ws.eval(0.5 * (m + b));
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  // Standard acceptance test: |S2 - S1| < 15 tol bounds the Richardson error.
  if (std::abs(delta) <= 15.0 * tol) {
    ws.error_total += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (depth <= 0)
    raise(ErrorCode::MaxDepth,
          "adaptive quadrature hit its recursion cap on [" + std::to_string(a) +
              ", " + std::to_string(b) + "] before reaching tolerance");
  return refine(ws, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         refine(ws, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    int max_depth) {
  if (!(tol > 0.0))
    raise(ErrorCode::InvalidArgument, "quadrature tolerance must be positive");
  if (!(a <= b))
    raise(ErrorCode::InvalidArgument,
          "integration bounds must satisfy a <= b, got [" + std::to_string(a) +
              ", " + std::to_string(b) + "]");
  Workspace ws{f};
  const double fa = ws.eval(a);
  const double fm = ws.eval(0.5 * (a + b));
  const double fb = ws.eval(b);
  if (a == b) return {0.0, 0.0, ws.evaluations};
  const double whole = simpson(fa, fm, fb, b - a);
  const double value = refine(ws, a, b, fa, fm, fb, whole, tol, max_depth);
  return {value, ws.error_total, ws.evaluations};
}

}  // namespace galicurve
