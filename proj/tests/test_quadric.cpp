// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcontact/errors.hpp"
#include "qcontact/quadric.hpp"
#include "test_util.hpp"

using namespace qct;

TEST_CASE("coefficient form evaluates the textbook equation") {
  // x^2 + y^2 + z^2 - 1, unit sphere.
  Quadric s = Quadric::from_coefficients(1, 1, 1, 0, 0, 0, 0, 0, 0, -1);
  CHECK(s.evaluate({0, 0, 0}) == -1.0);
  CHECK(s.evaluate({1, 0, 0}) == 0.0);
  CHECK(s.evaluate({0, 2, 0}) == 3.0);
  CHECK(s.negated().evaluate({0, 2, 0}) == -3.0);
  CHECK(s.scale() == 1.0);
  // Cross and linear terms carry the factor-two convention.
  Quadric q = Quadric::from_coefficients(0, 0, 0, 1, 0, 0, 0, 0, 0, 0);  // 2xy
  CHECK(q.evaluate({3, 5, 0}) == 30.0);
  Quadric l = Quadric::from_coefficients(0, 0, 0, 0, 0, 0, 1, 0, 0, 0);  // 2x
  CHECK(l.evaluate({3, 5, 0}) == 6.0);
  CHECK_THROWS_AS((void)Quadric::from_coefficients(0, 0, 0, 0, 0, 0, 0, 0, 0, 0), Error);
}

TEST_CASE("rigid motion validation rejects non-rotations") {
  Mat3 r = Mat3::identity();
  CHECK_NOTHROW((void)RigidMotion::validated(r, {1, 2, 3}));
  Mat3 stretched = r;
  stretched.m[0][0] = 1.1;
  CHECK_THROWS_AS((void)RigidMotion::validated(stretched, {0, 0, 0}), Error);
  Mat3 mirror = r;
  mirror.m[2][2] = -1;  // orthogonal but orientation-reversing
  CHECK_THROWS_AS((void)RigidMotion::validated(mirror, {0, 0, 0}), Error);
}

TEST_CASE("motion composition and inverse act on points as expected") {
  Rand rnd(201);
  for (int it = 0; it < 100; ++it) {
    RigidMotion m = rnd.motion(), n = rnd.motion();
    Vec3 p = rnd.vec(-5, 5);
    Vec3 lhs = m.then(n).apply(p);
    Vec3 rhs = n.apply(m.apply(p));
    CHECK((lhs - rhs).norm() <= 1e-12 * (1 + rhs.norm()));
    Vec3 back = m.inverse().apply(m.apply(p));
    CHECK((back - p).norm() <= 1e-12 * (1 + p.norm()));
  }
}

TEST_CASE("transforming a quadric moves its zero set and values") {
  Rand rnd(202);
  for (int it = 0; it < 200; ++it) {
    Quadric q = rnd.quadric();
    RigidMotion m = rnd.motion();
    Quadric t = transform(q, m);
    for (int k = 0; k < 4; ++k) {
      Vec3 p = rnd.vec(-3, 3);
      double direct = q.evaluate(p);
      double moved = t.evaluate(m.apply(p));
      CHECK(close_rel(moved, direct, 1e-9, 1e-9 * q.scale() * (1 + p.dot(p))));
    }
  }
}

TEST_CASE("transforms compose") {
  Rand rnd(203);
  for (int it = 0; it < 100; ++it) {
    Quadric q = rnd.quadric();
    RigidMotion m = rnd.motion(), n = rnd.motion();
    Quadric two = transform(transform(q, m), n);
    Quadric one = transform(q, m.then(n));
    Vec3 p = rnd.vec(-3, 3);
    CHECK(close_rel(two.evaluate(p), one.evaluate(p), 1e-8,
                    1e-9 * q.scale() * (1 + p.dot(p))));
  }
}

TEST_CASE("translated unit sphere has the frozen matrix entries") {
  Quadric s = Quadric::from_coefficients(1, 1, 1, 0, 0, 0, 0, 0, 0, -1);
  Quadric t = transform(s, RigidMotion::translate({0, 0, 2}));
  // (z - 2)^2 contributes -4z + 4: stored linear entry -2, constant 3.
  CHECK(t.quadratic().a33 == doctest::Approx(1.0));
  CHECK(t.linear().z == doctest::Approx(-2.0));
  CHECK(t.linear().x == doctest::Approx(0.0));
  CHECK(t.constant() == doctest::Approx(3.0));
}

TEST_CASE("canonical ellipsoid exposes its own geometry") {
  Rand rnd(204);
  for (int it = 0; it < 100; ++it) {
    double a = rnd.uniform(1.0, 2.0), b = rnd.uniform(0.5, 1.0), c = rnd.uniform(0.1, 0.5);
    RigidMotion m = rnd.motion();
    Ellipsoid e = Ellipsoid::canonical(a, b, c, m);
    CHECK(e.alpha() == doctest::Approx(a));
    CHECK(e.beta() == doctest::Approx(b));
    CHECK(e.gamma() == doctest::Approx(c));
    CHECK(e.alpha_p() * e.delta_p() == doctest::Approx(a));
    CHECK((e.center() - m.translation).norm() <= 1e-9 * (1 + m.translation.norm()));
    // Center is interior, vertex along each principal axis is on the surface.
    const Quadric& q = e.normalized();
    CHECK(q.evaluate(e.center()) < 0);
    double semis[3] = {a, b, c};
    for (int j = 0; j < 3; ++j) {
      Vec3 v = e.center() + e.axes().col(j) * semis[j];
      CHECK(std::fabs(q.evaluate(v)) <= 1e-9 * q.scale() * (1 + v.dot(v)));
    }
    // Axes orthonormal, right-handed.
    Mat3 g = e.axes().transposed() * e.axes();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(std::fabs(g.m[i][j] - (i == j ? 1 : 0)) <= 1e-12);
    CHECK(e.axes().det() == doctest::Approx(1.0));
  }
}

TEST_CASE("ellipsoid ordering throws on misordered semi-axes") {
  CHECK_THROWS_AS((void)Ellipsoid::canonical(0.5, 1.0, 0.2), Error);
}

TEST_CASE("construction accepts either overall sign and records the flip") {
  Rand rnd(205);
  for (int it = 0; it < 50; ++it) {
    Ellipsoid e = rnd.ellipsoid();
    Ellipsoid f = Ellipsoid::from_quadric(e.normalized().negated());
    CHECK(f.sign_flipped());
    CHECK(!Ellipsoid::from_quadric(e.normalized()).sign_flipped());
    CHECK(f.alpha() == doctest::Approx(e.alpha()));
    CHECK(f.gamma() == doctest::Approx(e.gamma()));
    CHECK((f.center() - e.center()).norm() <= 1e-7 * (1 + e.center().norm()));
    // The stored quadric is interior-negative either way.
    CHECK(f.normalized().evaluate(f.center()) < 0);
  }
}

TEST_CASE("non-ellipsoids are rejected") {
  Quadric h = Quadric::from_coefficients(1, 1, -1, 0, 0, 0, 0, 0, 0, -1);
  CHECK_THROWS_AS((void)Ellipsoid::from_quadric(h), Error);
  // Empty real locus: definite quadratic part, wrong constant sign.
  Quadric imag = Quadric::from_coefficients(1, 1, 1, 0, 0, 0, 0, 0, 0, 1);
  CHECK_THROWS_AS((void)Ellipsoid::from_quadric(imag), Error);
}

TEST_CASE("moving an ellipsoid moves its center and keeps its shape") {
  Rand rnd(206);
  for (int it = 0; it < 50; ++it) {
    Ellipsoid e = rnd.ellipsoid();
    RigidMotion m = rnd.motion();
    Ellipsoid f = e.moved(m);
    CHECK((f.center() - m.apply(e.center())).norm() <= 1e-7 * (1 + f.center().norm()));
    CHECK(f.alpha() == doctest::Approx(e.alpha()));
    CHECK(f.beta() == doctest::Approx(e.beta()));
    CHECK(f.gamma() == doctest::Approx(e.gamma()));
    CHECK(f.delta_p() == doctest::Approx(e.delta_p()));
  }
}
