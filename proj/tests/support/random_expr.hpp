#pragma once

// Deterministic random expression source for the jet-vs-finite-difference
// checks. Generated trees keep log, sqrt, and division arguments away from
// their domain boundaries; candidates whose value or first derivative is
// ill-conditioned for central differencing are rejected and redrawn.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "galicurve/expr.hpp"

namespace test_support {

class RandomExprSource {
 public:
  explicit RandomExprSource(std::uint64_t seed) : rng_(seed) {}

  // Draws until the expression evaluates cleanly near t0 with a usable
  // derivative; returns the tree.
  galicurve::ExprPtr next(double t0) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      galicurve::ExprPtr e = gen(3);
      if (usable(e, t0)) return e;
    }
    // Plenty of draws succeed long before this.
    return galicurve::parse("t^2+1");
  }

 private:
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  galicurve::ExprPtr positive_wrap(galicurve::ExprPtr e) {
    // e^2 + c with c > 0: safe argument for log and sqrt, and a safe divisor.
    using galicurve::Expr;
    return Expr::make_binary(
        '+', Expr::make_binary('^', std::move(e), Expr::make_number(2.0)),
        Expr::make_number(uniform(0.5, 1.5)));
  }

  galicurve::ExprPtr gen(int depth) {
    using galicurve::Expr;
    using galicurve::FuncTag;
    if (depth == 0 || pick(4) == 0) {
      return pick(2) == 0 ? Expr::make_variable()
                          : Expr::make_number(uniform(0.3, 2.5));
    }
    switch (pick(8)) {
      case 0:
        return Expr::make_binary('+', gen(depth - 1), gen(depth - 1));
      case 1:
        return Expr::make_binary('-', gen(depth - 1), gen(depth - 1));
      case 2:
        return Expr::make_binary('*', gen(depth - 1), gen(depth - 1));
      case 3:
        return Expr::make_binary('/', gen(depth - 1),
                                 positive_wrap(gen(depth - 1)));
      case 4:
        return Expr::make_neg(gen(depth - 1));
      case 5: {
        static constexpr FuncTag safe[] = {FuncTag::Sin, FuncTag::Cos,
                                           FuncTag::Sinh, FuncTag::Cosh,
                                           FuncTag::Exp};
        return Expr::make_call(safe[pick(5)], gen(depth - 1));
      }
      case 6: {
        const FuncTag f = pick(2) == 0 ? FuncTag::Log : FuncTag::Sqrt;
        return Expr::make_call(f, positive_wrap(gen(depth - 1)));
      }
      default:
        return Expr::make_binary('^', gen(depth - 1),
                                 Expr::make_number(1.0 + pick(3)));
    }
  }

  bool usable(const galicurve::ExprPtr& e, double t0) const {
    try {
      const galicurve::Jet3 j = galicurve::eval_jet(e, t0, {});
      if (!j.finite()) return false;
      if (std::abs(j.v) > 1e4 || std::abs(j.d1) > 1e4 || std::abs(j.d2) > 1e5 ||
          std::abs(j.d3) > 1e6)
        return false;
      if (std::abs(j.d1) < 1e-3) return false;
      const double h = 1e-6;
      (void)galicurve::eval_scalar(e, t0 - 2.0 * h, {});
      (void)galicurve::eval_scalar(e, t0 + 2.0 * h, {});
      return true;
    } catch (const galicurve::Error&) {
      return false;
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace test_support
