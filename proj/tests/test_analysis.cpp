#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "galicurve/analysis.hpp"
#include "support/curves.hpp"

using namespace galicurve;
using test_support::galilean_spec;
using test_support::pg_spec;

namespace {

constexpr double kPi = 3.14159265358979323846;

CurveSpec helix_spec(double a, int samples = 256) {
  return galilean_spec("t", "a*cos(t)", "a*sin(t)", 0.0, 2.0 * kPi,
                       {{"a", a}}, samples);
}

CurveSpec cubic_spec(int samples = 256) {
  return galilean_spec("t", "t^2/2", "t^3/6", 0.0, 1.0, {}, samples);
}

}  // namespace

TEST_CASE("harmonic curvature") {
  CHECK(harmonic_curvature(2.0, 1.0) == 2.0);
  CHECK(harmonic_curvature(1.0, 1.0) == 1.0);
  CHECK(harmonic_curvature(3.0, -1.5) == -2.0);
  try {
    harmonic_curvature(1.0, 0.0);
    FAIL("expected a vanishing-torsion error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VanishingTorsion);
  }
}

TEST_CASE("spherical representations") {
  const auto helix = galilean_spec("t", "cos(t)", "sin(t)", -1.0, 7.0);
  const Vec3G tangent = spherical_representation(helix, FrameVector::T, 0.0);
  CHECK(tangent.x1 == 1.0);
  CHECK(tangent.x2 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(tangent.x3 == doctest::Approx(1.0).epsilon(1e-14));

  // normal images are Euclidean unit vectors in the isotropic plane
  const auto cubic = cubic_spec();
  for (double t : {0.1, 0.4, 0.9}) {
    const Vec3G n = spherical_representation(cubic, FrameVector::N, t);
    CHECK(n.x1 == 0.0);
    CHECK(std::hypot(n.x2, n.x3) == doctest::Approx(1.0).epsilon(1e-12));
  }

  // planar curve: the binormal image is a single point
  const auto planar = galilean_spec("t", "t^2/2", "0", 0.0, 1.0);
  for (double t : {0.0, 0.5, 1.0}) {
    const Vec3G b = spherical_representation(planar, FrameVector::B, t);
    CHECK(b.x1 == 0.0);
    CHECK(b.x2 == doctest::Approx(0.0));
    CHECK(b.x3 == doctest::Approx(1.0));
  }
}

TEST_CASE("indicatrix arc lengths") {
  const auto helix = helix_spec(2.0);

  SUBCASE("tangent image of the helix") {
    CHECK(arc_length_T(helix, 0.0, 5.0, 1e-10) ==
          doctest::Approx(10.0).epsilon(1e-9));
    CHECK(arc_length_T(helix, 1.0, 1.0, 1e-10) == 0.0);
  }

  SUBCASE("normal and binormal images of the helix") {
    CHECK(arc_length_N(helix, 0.0, 5.0, 1e-10) ==
          doctest::Approx(5.0).epsilon(1e-9));
    CHECK(arc_length_B(helix, 0.0, 5.0, 1e-10) ==
          doctest::Approx(5.0).epsilon(1e-9));
  }

  SUBCASE("closed forms for the twisted cubic") {
    const auto cubic = cubic_spec();
    // integral of sqrt(1+s^2): (s sqrt(1+s^2) + asinh s)/2
    const double expected_T = 0.5 * (std::sqrt(2.0) + std::asinh(1.0));
    CHECK(std::abs(arc_length_T(cubic, 0.0, 1.0, 1e-10) - expected_T) <= 1e-8);
    // integral of 1/(1+s^2): arctan
    CHECK(std::abs(arc_length_N(cubic, 0.0, 1.0, 1e-10) - kPi / 4.0) <= 1e-9);
  }

  SUBCASE("planar curve has point indicatrices for N and B") {
    const auto planar = galilean_spec("t", "t^2/2", "0", 0.0, 1.0);
    CHECK(arc_length_N(planar, 0.0, 1.0, 1e-10) == doctest::Approx(0.0));
    CHECK(arc_length_B(planar, 0.0, 1.0, 1e-10) == doctest::Approx(0.0));
  }

  SUBCASE("N and B agree on every test curve") {
    const CurveSpec curves[] = {helix_spec(0.5), helix_spec(2.0), cubic_spec()};
    for (const CurveSpec& c : curves) {
      const ExprArcCurve curve(c);
      const double lo = curve.s_min(), hi = curve.s_max();
      CHECK(std::abs(arc_length_N(curve, lo, hi, 1e-10) -
                     arc_length_B(curve, lo, hi, 1e-10)) <= 1e-12);
    }
  }
}

TEST_CASE("linear fit") {
  const std::vector<double> xs{0.0, 1.0, 2.0};
  const std::vector<double> line{0.0, 2.0, 4.0};
  const LinearityReport exact = fit_linear(xs, line);
  CHECK(exact.slope == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(exact.intercept == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(exact.max_residual <= 1e-14);
  CHECK(exact.rms_residual <= 1e-14);

  const std::vector<double> convex{0.0, 1.0, 4.0};
  CHECK(fit_linear(xs, convex).max_residual > 0.0);

  const std::vector<double> flat{3.0, 3.0, 3.0};
  CHECK(fit_linear(xs, flat).slope == doctest::Approx(0.0));

  const std::vector<double> two{0.0, 1.0};
  try {
    fit_linear(two, two);
    FAIL("expected a too-few-points error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewPoints);
  }

  const std::vector<double> unordered{0.0, 2.0, 1.0};
  CHECK_THROWS_AS(fit_linear(unordered, line), Error);
}

TEST_CASE("analysis profiles") {
  SUBCASE("circular helix") {
    const CurveAnalysis a = analyze(helix_spec(2.0));
    REQUIRE(a.s.size() == 256);
    CHECK(a.sT[0] == 0.0);
    CHECK(a.sN[0] == 0.0);
    CHECK(a.sB[0] == 0.0);
    for (std::size_t i = 0; i < a.s.size(); ++i) {
      REQUIRE(std::abs(a.kappa[i] - 2.0) <= 1e-10);
      REQUIRE(std::abs(a.tau[i] - 1.0) <= 1e-10);
      REQUIRE(std::abs(a.H[i] - 2.0) <= 1e-10);
      REQUIRE(a.H[i] == a.kappa[i] / a.tau[i]);  // exact by construction
      if (i) {
        REQUIRE(a.sT[i] >= a.sT[i - 1]);
        REQUIRE(a.sN[i] >= a.sN[i - 1]);
        REQUIRE(a.sB[i] >= a.sB[i - 1]);
      }
    }
    CHECK(std::abs(a.sT.back() - 4.0 * kPi) <= 1e-8);
    CHECK(std::abs(a.sN.back() - 2.0 * kPi) <= 1e-8);
  }

  SUBCASE("planar parabola") {
    const CurveAnalysis a = analyze(galilean_spec("t", "t^2/2", "0", 0.0, 1.0));
    for (std::size_t i = 0; i < a.s.size(); ++i) {
      REQUIRE(a.tau[i] == 0.0);
      REQUIRE(std::isnan(a.H[i]));
      REQUIRE(a.sN[i] == 0.0);
      REQUIRE(a.sB[i] == 0.0);
    }
  }

  SUBCASE("pseudo-Galilean hyperbolic curve") {
    const CurveAnalysis a = analyze(pg_spec("t", "cosh(t)", "sinh(t)", 0.0, 2.0));
    CHECK(a.geometry == Geometry::PseudoGalilean);
    for (std::size_t i = 0; i < a.s.size(); ++i) {
      REQUIRE(std::abs(a.kappa[i] - 1.0) <= 1e-10);
      REQUIRE(std::abs(a.tau[i] - 1.0) <= 1e-10);
      REQUIRE(std::abs(a.H[i] - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("differentiating the cumulative arc lengths recovers the integrands") {
  const CurveSpec curves[] = {helix_spec(2.0, 1024), cubic_spec(1024)};
  for (const CurveSpec& spec : curves) {
    const CurveAnalysis a = analyze(spec);
    const std::size_t n = a.s.size();
    for (std::size_t i = 1; i + 1 < n; i += 7) {
      const double ds = a.s[i + 1] - a.s[i - 1];
      const double dT = (a.sT[i + 1] - a.sT[i - 1]) / ds;
      const double dN = (a.sN[i + 1] - a.sN[i - 1]) / ds;
      REQUIRE(std::abs(dT - a.kappa[i]) <= 1e-6 * std::max(1.0, a.kappa[i]));
      REQUIRE(std::abs(dN - std::abs(a.tau[i])) <=
              1e-6 * std::max(1.0, std::abs(a.tau[i])));
    }
  }
}

TEST_CASE("sN and sB are identical sequences") {
  const CurveAnalysis a = analyze(cubic_spec());
  for (std::size_t i = 0; i < a.s.size(); ++i)
    REQUIRE(std::abs(a.sN[i] - a.sB[i]) <= 1e-12);
}

TEST_CASE("endpoint arc lengths are grid independent") {
  for (const CurveSpec& coarse : {helix_spec(2.0, 256), cubic_spec(256)}) {
    CurveSpec fine = coarse;
    fine.samples = 1024;
    const CurveAnalysis a = analyze(coarse);
    const CurveAnalysis b = analyze(fine);
    CHECK(std::abs(a.sT.back() - b.sT.back()) < 1e-8);
    CHECK(std::abs(a.sN.back() - b.sN.back()) < 1e-8);
    CHECK(std::abs(a.sB.back() - b.sB.back()) < 1e-8);
  }
}

TEST_CASE("classification") {
  SUBCASE("circular helix") {
    const HelixClass r = classify(helix_spec(2.0));
    CHECK(r.tag == HelixTag::CircularHelix);
    CHECK(r.evidence.fit_sT.slope == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.evidence.fit_sN.slope == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.evidence.fit_sB.slope == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.evidence.fit_sT.max_residual < 1e-7);
    CHECK(r.evidence.fit_sN.max_residual < 1e-7);
    CHECK(r.evidence.fit_sB.max_residual < 1e-7);
    // circular implies the general-helix criteria hold as well
    CHECK(r.evidence.harmonic.rel_dispersion < 1e-6);
    CHECK_FALSE(r.evidence.tau_sign_change);
  }

  SUBCASE("twisted cubic is generic") {
    const HelixClass r = classify(cubic_spec());
    CHECK(r.tag == HelixTag::Generic);
    // H = (1+s^2)^(3/2) doubles over the range
    CHECK(r.evidence.harmonic.rel_dispersion > 0.1);
  }

  SUBCASE("planar curve has undefined torsion") {
    const HelixClass r = classify(galilean_spec("t", "t^2/2", "0", 0.0, 1.0));
    CHECK(r.tag == HelixTag::UndefinedTorsion);
    CHECK(r.evidence.torsion_zero_fraction == 1.0);
  }

  SUBCASE("negative-torsion helix is general but not circular") {
    const HelixClass r =
        classify(galilean_spec("t", "2*cos(t)", "-2*sin(t)", 0.0, 2.0 * kPi));
    CHECK(r.tag == HelixTag::GeneralHelix);
    CHECK(r.evidence.tau.mean == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(r.evidence.harmonic.mean == doctest::Approx(-2.0).epsilon(1e-9));
  }

  SUBCASE("pseudo-Galilean hyperbolic curve is a circular helix") {
    const HelixClass r = classify(pg_spec("t", "cosh(t)", "sinh(t)", 0.0, 2.0));
    CHECK(r.tag == HelixTag::CircularHelix);
    CHECK(r.evidence.harmonic.mean == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("classification is invariant under random motions") {
  std::mt19937_64 rng(0xafc587d42b119b31ull);
  std::uniform_real_distribution<double> shift(-4.0, 4.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  const CurveSpec curves[] = {helix_spec(2.0),
                              cubic_spec(),
                              galilean_spec("t", "t^2/2", "0", 0.0, 1.0)};
  for (const CurveSpec& c : curves) {
    const HelixTag base = classify(c).tag;
    for (int k = 0; k < 20; ++k) {
      const MotionB6 m{shift(rng), shift(rng), shift(rng),
                       shift(rng), shift(rng), angle(rng)};
      REQUIRE(classify(transform_curve(c, m)).tag == base);
    }
  }
}

TEST_CASE("analysis rejects inadmissible curves") {
  const auto bad = galilean_spec("t^2", "t", "0", -1.0, 1.0);
  try {
    analyze(bad);
    FAIL("expected a not-admissible error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdmissible);
  }
  CHECK_THROWS_AS(classify(bad), Error);
}
