// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <functional>

#include "qcontact/errors.hpp"
#include "qcontact/oracle.hpp"
#include "qcontact/plane.hpp"
#include "test_util.hpp"

using namespace qc;
using qct::Rand;
using cd = std::complex<double>;

namespace {

Errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::Parse;
}

// Expands lead * prod (x - r[i]) into descending coefficients.
QuarticPoly from_roots(double lead, const cd r[4]) {
  cd c[5] = {1, 0, 0, 0, 0};
  for (int k = 0; k < 4; ++k)
    for (int i = k + 1; i-- > 0;) c[i + 1] -= r[k] * c[i];
  QuarticPoly p;
  double* out[5] = {&p.c4, &p.c3, &p.c2, &p.c1, &p.c0};
  for (int i = 0; i < 5; ++i) {
    REQUIRE(std::fabs(c[i].imag()) <= 1e-9 * (1 + std::abs(c[i])));
    *out[i] = lead * c[i].real();
  }
  return p;
}

cd horner(const QuarticPoly& p, cd x) {
  return (((p.c4 * x + p.c3) * x + p.c2) * x + p.c1) * x + p.c0;
}

}  // namespace

TEST_CASE("roots of hand-factored quartics come back sorted and typed") {
  {
    const cd r[4] = {1, 2, 3, -4};
    RootSet rs = quartic_roots(from_roots(-2.0, r));
    CHECK(rs.count == 4);
    CHECK(rs.structural_zeros == 0);
    CHECK(rs.n_real == 4);
    CHECK_FALSE(rs.has_nonreal);
    const double want[4] = {-4, 1, 2, 3};
    for (int i = 0; i < 4; ++i) {
      CHECK(rs.roots[i].real() == doctest::Approx(want[i]).epsilon(1e-9));
      CHECK(rs.roots[i].imag() == 0.0);
    }
  }
  {
    // (x^2 + 2x + 5)(x - 1)(x - 3): one conjugate pair, exactly mirrored
    // after symmetrization.
    const cd r[4] = {{-1, 2}, {-1, -2}, 1, 3};
    RootSet rs = quartic_roots(from_roots(-1.0, r));
    CHECK(rs.n_real == 2);
    CHECK(rs.has_nonreal);
    CHECK(rs.roots[0] == std::conj(rs.roots[1]));
    CHECK(rs.roots[0].real() == doctest::Approx(-1).epsilon(1e-9));
    CHECK(rs.roots[0].imag() == doctest::Approx(-2).epsilon(1e-9));
    CHECK(rs.roots[2].real() == doctest::Approx(1).epsilon(1e-9));
    CHECK(rs.roots[3].real() == doctest::Approx(3).epsilon(1e-9));
  }
  {
    // (x^2 + 1)(x^2 + 4): no real roots.
    const cd r[4] = {{0, 1}, {0, -1}, {0, 2}, {0, -2}};
    RootSet rs = quartic_roots(from_roots(-0.5, r));
    CHECK(rs.n_real == 0);
    CHECK(rs.has_nonreal);
  }
  {
    // (x - 2)^2 (x + 1)(x + 3): the double root comes off the companion
    // matrix with a tiny imaginary part and must be snapped back.
    const cd r[4] = {2, 2, -1, -3};
    RootSet rs = quartic_roots(from_roots(1.5, r));
    CHECK(rs.n_real == 4);
    CHECK_FALSE(rs.has_nonreal);
    CHECK(rs.roots[2].real() == doctest::Approx(2).epsilon(1e-4));
    CHECK(rs.roots[3].real() == doctest::Approx(2).epsilon(1e-4));
  }
}

TEST_CASE("trailing zero bands strip as structural roots, leading zero throws") {
  // -2 x^4 - 3 x^3 + 5 x^2 = x^2 (-2 x^2 - 3 x + 5): factors (x-1)(x+2.5).
  QuarticPoly p{-2, -3, 5, 0, 0};
  RootSet rs = quartic_roots(p);
  CHECK(rs.structural_zeros == 2);
  CHECK(rs.count == 2);
  CHECK(rs.n_real == 2);
  CHECK(rs.roots[0].real() == doctest::Approx(-2.5).epsilon(1e-12));
  CHECK(rs.roots[1].real() == doctest::Approx(1).epsilon(1e-12));

  // One structural zero leaves a cubic; Vieta on -x^3 + 2x^2 + 3x + 4.
  QuarticPoly q{-1, 2, 3, 4, 0};
  RootSet rc = quartic_roots(q);
  CHECK(rc.structural_zeros == 1);
  CHECK(rc.count == 3);
  cd sum = 0, prod = 1;
  for (int i = 0; i < 3; ++i) sum += rc.roots[i], prod *= rc.roots[i];
  CHECK(sum.real() == doctest::Approx(2).epsilon(1e-9));
  CHECK(std::fabs(sum.imag()) <= 1e-9);
  CHECK(prod.real() == doctest::Approx(4).epsilon(1e-9));

  // At most two roots are stripped even when more coefficients vanish.
  RootSet rq = quartic_roots(QuarticPoly{-1, 0, 0, 0, 0});
  CHECK(rq.structural_zeros == 2);
  CHECK(rq.count == 2);
  CHECK(rq.roots[0].real() == 0.0);
  CHECK(rq.roots[1].real() == 0.0);

  CHECK(thrown_code([] { quartic_roots(QuarticPoly{0, 1, 1, 1, 1}); }) ==
        Errc::LeadingZero);
  CHECK(thrown_code([] { quartic_roots(QuarticPoly{1e-12, 1, 1, 1, 1}); }) ==
        Errc::LeadingZero);
}

TEST_CASE("pencil roots satisfy the polynomial they came from") {
  Rand rnd(0xf007);
  for (int rep = 0; rep < 150; ++rep) {
    Ellipsoid e = rnd.ellipsoid();
    Ellipsoid f = rnd.ellipsoid();
    QuarticPoly p = char_poly(e.normalized(), f.normalized());
    RootSet rs = quartic_roots(p);
    CHECK(rs.structural_zeros == 0);  // both matrices have full rank
    for (int i = 0; i < rs.count; ++i) {
      double m = std::max(1.0, std::abs(rs.roots[i]));
      double budget = 1e-6 * p.max_abs() * m * m * m * m;
      CHECK(std::abs(horner(p, rs.roots[i])) <= budget);
    }
  }
}

TEST_CASE("pencil roots of a stiff pencil keep the genuine trailing coefficients") {
  // A radius 0.03 sphere strictly inside a unit-scale ellipsoid: the pencil
  // coefficients span ten orders of magnitude (c4 ~ -1.4e9, c0 ~ -0.31), so
  // a flat band proportional to max|c_k| would strip the real trailing
  // coefficients and invent a complex pair. The per-coefficient floors keep
  // all four real roots, two per scale cluster.
  Ellipsoid tiny =
      Ellipsoid::canonical(0.03, 0.03, 0.03, RigidMotion::translate({0.3, -0.2, 0.1}));
  Quadric shell = Ellipsoid::canonical(1.5, 1.2, 1.0).normalized();
  RootSet rs = pencil_roots(tiny, shell);
  CHECK(rs.structural_zeros == 0);
  CHECK(rs.count == 4);
  CHECK(rs.n_real == 4);
  CHECK_FALSE(rs.has_nonreal);
  for (int i = 0; i < rs.count; ++i) CHECK(rs.roots[i].real() < 0);
  CHECK(std::abs(rs.roots[0]) > 100 * std::abs(rs.roots[3]));
  // Each root kills the original, un-recentered pencil determinant.
  QuarticPoly p = char_poly(tiny.normalized(), shell);
  for (int i = 0; i < rs.count; ++i) {
    double lam = rs.roots[i].real();
    double m = std::max(1.0, std::fabs(lam));
    CHECK(std::fabs(qct::eigen_pencil_det(tiny.normalized(), shell, lam)) <=
          1e-6 * p.max_abs() * m * m * m * m);
  }
}

TEST_CASE("plane pencils strip two structural zeros and keep the real pair") {
  // Sphere r = 2 at height 3 over z = 0: surviving quadratic
  // (-l^2 + 3l - 1)/4 has roots (3 +- sqrt(5))/2, both positive.
  Ellipsoid e = Ellipsoid::canonical(2, 2, 2, RigidMotion::translate({0, 0, 3}));
  PlaneReport pr = plane_contact(e, Plane::make({0, 0, 1}, 0.0));
  RootSet rs = quartic_roots(pr.poly);
  CHECK(rs.structural_zeros == 2);
  CHECK(rs.count == 2);
  CHECK(rs.n_real == 2);
  CHECK(rs.roots[0].real() == doctest::Approx((3 - std::sqrt(5)) / 2).epsilon(1e-9));
  CHECK(rs.roots[1].real() == doctest::Approx((3 + std::sqrt(5)) / 2).epsilon(1e-9));
}

TEST_CASE("surface sampling flags known crossings and clears known separations") {
  // Unit sphere centered on the pipe wall crosses it.
  Quadric pipe = Quadric::from_coefficients(1.0 / 25, 1.0 / 25, 0, 0, 0, 0, 0, 0, 0, -1);
  Ellipsoid on_wall = Ellipsoid::canonical(1, 1, 1, RigidMotion::translate({5, 0, 0}));
  SampleResult hit = sample_intersection(on_wall, pipe, 128);
  CHECK(hit.verdict == SampleVerdict::MixedSign);
  CHECK(hit.min < 0);
  CHECK(hit.max > 0);
  CHECK(hit.grid == 128);

  // Far outside: the form is positive over the whole surface.
  Ellipsoid outside = Ellipsoid::canonical(1, 1, 1, RigidMotion::translate({9, 0, 0}));
  SampleResult clear = sample_intersection(outside, pipe, 128);
  CHECK(clear.verdict == SampleVerdict::SeparatedSign);
  CHECK(clear.min > 0);

  // Contained: negative everywhere.
  Ellipsoid inside = Ellipsoid::canonical(0.5, 0.5, 0.5);
  SampleResult in = sample_intersection(inside, pipe, 128);
  CHECK(in.verdict == SampleVerdict::SeparatedSign);
  CHECK(in.max < 0);

  // Slim overlap along the shortest principal axis: both pole rows sit on
  // every grid, so even a coarse scan sees the sign change. Distinct
  // semi-axes pin the principal directions (a sphere's are arbitrary).
  Ellipsoid graze =
      Ellipsoid::canonical(1, 0.9, 0.8, RigidMotion::translate({0, 0, 1.799}));
  Quadric unit = Quadric::from_coefficients(1, 1, 1, 0, 0, 0, 0, 0, 0, -1);
  CHECK(sample_intersection(graze, unit, 16).verdict == SampleVerdict::MixedSign);
  CHECK(sample_intersection(graze, unit, 256).verdict == SampleVerdict::MixedSign);
}

TEST_CASE("parallel scan matches the serial reference bit for bit") {
  Rand rnd(0xbeef);
  for (int rep = 0; rep < 20; ++rep) {
    Ellipsoid e = rnd.ellipsoid();
    Quadric q = rnd.quadric();
    SampleResult a = sample_intersection(e, q, 96);
    SampleResult b = sample_intersection_serial(e, q, 96);
    CHECK(a.min == b.min);
    CHECK(a.max == b.max);
    CHECK(a.verdict == b.verdict);
    CHECK(a.grid == b.grid);
  }
}
