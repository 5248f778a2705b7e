// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qcontact/classifier.hpp"
#include "qcontact/quadric.hpp"

namespace qc {

// The plane n . x = d, i.e. n1 x + n2 y + n3 z - d = 0.
struct Plane {
  Vec3 n;
  double d = 0;

  // Throws Parse when n is zero.
  static Plane make(const Vec3& n, double d);
  // Degree-one quadric with the same zero set and sign convention:
  // R+ of the quadric is the n . x >= d side.
  Quadric to_quadric() const;
};

// Contact between an ellipsoid and a plane; no smallness hypothesis is
// involved. The pencil polynomial has a structural double zero root;
// transversal contact holds iff d3 < 0, otherwise c3 > 0 puts e in R+ and
// c3 < 0 in R-.
struct PlaneReport {
  bool transversal = false;
  Region region = Region::Indeterminate;  // Straddling when transversal
  QuarticPoly poly;
  double d3 = 0;
  Sign s3 = Sign::Zero;   // banded sign of d3
  Sign sc3 = Sign::Zero;  // banded sign of c3
};

PlaneReport plane_contact(const Ellipsoid& e, const Plane& p,
                          const Tolerances& tol = {});

// Side of the plane a point lies on: sign of n . p - d, banded against
// eps_rel * (|n| |p| + |d|).
Sign side_of_plane(const Plane& pl, const Vec3& p, const Tolerances& tol = {});

// Recovers a plane from a quadric whose zero set is one: either a linear
// equation (quadratic part zero at tolerance) or a doubled plane
// (x . u - t)^2 = 0. Throws NotAPlane otherwise.
Plane plane_from_quadric(const Quadric& q, const Tolerances& tol = {});

}  // namespace qc
