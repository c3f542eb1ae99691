#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "galicurve/jet.hpp"
#include "support/oracles.hpp"

using galicurve::Error;
using galicurve::ErrorCode;
using galicurve::Jet3;

namespace {

void check_jet(const Jet3& got, double v, double d1, double d2, double d3,
               double tol = 1e-14) {
  CHECK(got.v == doctest::Approx(v).epsilon(tol));
  CHECK(got.d1 == doctest::Approx(d1).epsilon(tol));
  CHECK(got.d2 == doctest::Approx(d2).epsilon(tol));
  CHECK(got.d3 == doctest::Approx(d3).epsilon(tol));
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool jets_close(const Jet3& a, const Jet3& b, double tol) {
  return close_rel(a.v, b.v, tol) && close_rel(a.d1, b.d1, tol) &&
         close_rel(a.d2, b.d2, tol) && close_rel(a.d3, b.d3, tol);
}

Jet3 random_jet(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("addition is componentwise") {
  check_jet(Jet3{1, 1, 0, 0} + Jet3{2, 0, 0, 0}, 3, 1, 0, 0);

  const Jet3 j{0.7, -1.2, 3.4, 0.1};
  const Jet3 sum = Jet3{0, 0, 0, 0} + j;
  CHECK(sum.v == j.v);
  CHECK(sum.d1 == j.d1);
  CHECK(sum.d2 == j.d2);
  CHECK(sum.d3 == j.d3);

  // jets of t and t^2 at t0 = 1
  check_jet(Jet3{1, 1, 0, 0} + Jet3{1, 2, 2, 0}, 2, 3, 2, 0);
}

TEST_CASE("multiplication follows the Leibniz rule") {
  // (1+t)^2 at 0
  check_jet(Jet3{1, 1, 0, 0} * Jet3{1, 1, 0, 0}, 1, 2, 2, 0);

  const Jet3 j{0.3, 1.7, -2.0, 4.0};
  const Jet3 scaled = Jet3::constant(2.5) * j;
  check_jet(scaled, 2.5 * 0.3, 2.5 * 1.7, 2.5 * -2.0, 2.5 * 4.0);

  // sin(t)*cos(t) at 0 equals sin(2t)/2: derivatives (0, 1, 0, -4)
  const Jet3 t = Jet3::variable(0.0);
  check_jet(sin(t) * cos(t), 0, 1, 0, -4, 1e-15);
}

TEST_CASE("division inverts multiplication") {
  // 1/(1+t) at 0: geometric series 1 - t + t^2 - t^3 gives (1, -1, 2, -6)
  check_jet(divide(Jet3{1, 0, 0, 0}, Jet3{1, 1, 0, 0}), 1, -1, 2, -6);

  const Jet3 j{1.4, -0.3, 2.2, 0.9};
  check_jet(divide(j, j), 1, 0, 0, 0);

  check_jet(divide(Jet3{0, 2, 0, 0}, Jet3{2, 0, 0, 0}), 0, 1, 0, 0);

  CHECK_THROWS_AS(divide(Jet3{1, 0, 0, 0}, Jet3{0, 1, 0, 0}), Error);
  try {
    divide(Jet3{1, 0, 0, 0}, Jet3{1e-13, 1, 0, 0});
    FAIL("expected a division-by-zero error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("elementary functions at the identity jet") {
  const Jet3 t = Jet3::variable(0.0);
  check_jet(sin(t), 0, 1, 0, -1);
  check_jet(exp(t), 1, 1, 1, 1);
  check_jet(cosh(t), 1, 0, 1, 0);
  check_jet(cos(t), 1, 0, -1, 0);
  check_jet(sinh(t), 0, 1, 0, 1);

  CHECK_THROWS_AS(log(Jet3::constant(-1.0)), Error);
  CHECK_THROWS_AS(sqrt(Jet3::constant(-0.5)), Error);
  CHECK_THROWS_AS(pow(Jet3::constant(-2.0), 0.5), Error);
}

TEST_CASE("series inversion") {
  check_jet(invert_series(Jet3{0, 2, 0, 0}, 0.0), 0, 0.5, 0, 0);

  // x(t) = t + t^2 at 0; Lagrange inversion gives t(x) = x - x^2 + 2x^3 - ...
  check_jet(invert_series(Jet3{0, 1, 2, 0}, 0.0), 0, 1, -2, 12);

  const double t0 = 3.25;
  check_jet(invert_series(Jet3::variable(t0), t0), t0, 1, 0, 0);

  try {
    invert_series(Jet3{1, 0, 2, 0}, 0.0);
    FAIL("expected a non-invertible error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonInvertible);
  }
}

TEST_CASE("composition") {
  const Jet3 f{2.0, -1.5, 0.25, 3.0};
  const Jet3 composed = compose(f, Jet3::variable(f.v));
  CHECK(composed.v == f.v);
  CHECK(composed.d1 == f.d1);
  CHECK(composed.d2 == f.d2);
  CHECK(composed.d3 == f.d3);

  // f = jet of u^2 at u = 2, g = 3h + 2: (3h+2)^2 = 4 + 12h + 9h^2
  check_jet(compose(Jet3{4, 4, 2, 0}, Jet3{2, 3, 0, 0}), 4, 12, 18, 0);

  check_jet(compose(Jet3::constant(7.5), Jet3{7.5, 1.2, -0.3, 2.0}), 7.5, 0, 0, 0);
}

TEST_CASE("multiplication is commutative and associative on random jets") {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  for (int i = 0; i < 1000; ++i) {
    const Jet3 a = random_jet(rng);
    const Jet3 b = random_jet(rng);
    const Jet3 c = random_jet(rng);
    REQUIRE(jets_close(a * b, b * a, 1e-12));
    REQUIRE(jets_close((a * b) * c, a * (b * c), 1e-12));
  }
}

TEST_CASE("division undoes multiplication on random jets") {
  std::mt19937_64 rng(0x2545f4914f6cdd1dull);
  int tested = 0;
  while (tested < 1000) {
    const Jet3 a = random_jet(rng);
    const Jet3 b = random_jet(rng);
    if (std::abs(b.v) <= 0.1) continue;
    ++tested;
    REQUIRE(jets_close(divide(a * b, b), a, 1e-10));
  }
}

TEST_CASE("series inversion round-trips through composition") {
  std::mt19937_64 rng(0xda942042e4dd58b5ull);
  std::uniform_real_distribution<double> d1(0.3, 3.0);
  std::uniform_real_distribution<double> rest(-2.0, 2.0);
  std::uniform_real_distribution<double> sign(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    Jet3 x{rest(rng), d1(rng) * (sign(rng) < 0.5 ? -1.0 : 1.0), rest(rng),
           rest(rng)};
    const double t0 = rest(rng);
    const Jet3 inv = invert_series(x, t0);
    // x(t(s)) = s: the composition must be the identity jet at s0 = x.v.
    const Jet3 round_trip = compose(x, inv);
    REQUIRE(close_rel(round_trip.v, x.v, 1e-12));
    REQUIRE(close_rel(round_trip.d1, 1.0, 1e-10));
    REQUIRE(close_rel(round_trip.d2, 0.0, 1e-10));
    REQUIRE(close_rel(round_trip.d3, 0.0, 1e-10));
  }
}

TEST_CASE("elementary jets agree with central finite differences") {
  using test_support::central_d1;
  using test_support::central_d2;
  const double h = 1e-5;

  struct Case {
    double (*fn)(double);
    Jet3 (*jet_fn)(const Jet3&);
    double lo, hi;
  };
  const Case cases[] = {
      {[](double x) { return std::sin(x); },
       [](const Jet3& j) { return sin(j); }, -3.0, 3.0},
      {[](double x) { return std::cos(x); },
       [](const Jet3& j) { return cos(j); }, -3.0, 3.0},
      {[](double x) { return std::sinh(x); },
       [](const Jet3& j) { return sinh(j); }, -2.0, 2.0},
      {[](double x) { return std::cosh(x); },
       [](const Jet3& j) { return cosh(j); }, -2.0, 2.0},
      {[](double x) { return std::exp(x); },
       [](const Jet3& j) { return exp(j); }, -2.0, 2.0},
      {[](double x) { return std::log(x); },
       [](const Jet3& j) { return log(j); }, 0.2, 4.0},
      {[](double x) { return std::sqrt(x); },
       [](const Jet3& j) { return sqrt(j); }, 0.2, 4.0},
  };

  std::mt19937_64 rng(0xa0761d6478bd642full);
  for (const Case& c : cases) {
    std::uniform_real_distribution<double> dist(c.lo, c.hi);
    for (int i = 0; i < 50; ++i) {
      const double x0 = dist(rng);
      const Jet3 j = c.jet_fn(Jet3::variable(x0));
      const double fd1 = central_d1(c.fn, x0, h);
      const double fd2 = central_d2(c.fn, x0, h);
      REQUIRE(std::abs(j.d1 - fd1) <= 1e-6 * std::max(1.0, std::abs(j.d1)));
      REQUIRE(std::abs(j.d2 - fd2) <= 1e-4 * std::max(1.0, std::abs(j.d2)));
    }
  }
}
