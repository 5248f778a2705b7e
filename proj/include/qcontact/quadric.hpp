// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qcontact/geom.hpp"
#include "qcontact/tolerance.hpp"

namespace qc {

enum class QuadricClass {
  Ellipsoid,
  HyperboloidOneSheet,
  HyperboloidTwoSheets,
  EllipticParaboloid,
  HyperbolicParaboloid,
  EllipticCylinder,
  HyperbolicCylinder,
  ParabolicCylinder,
  ParallelPlanes,
  SinglePlane,
  Cone,
  IntersectingPlanes,
  Other,
};

const char* to_string(QuadricClass c);

// A quadric surface {x : x^T A x + 2 b . x + c = 0}, stored as the ten
// unique entries of its symmetric homogeneous 4x4 matrix
//   [ A  b ]
//   [ b^T c ].
// The representation is homogeneous: q and s*q (s != 0) describe the same
// surface, and nothing here renormalizes the caller's sign.
class Quadric {
 public:
  Quadric() = default;
  // a11 x^2 + a22 y^2 + a33 z^2 + 2 a12 xy + 2 a13 xz + 2 a23 yz
  //   + 2 b1 x + 2 b2 y + 2 b3 z + c = 0. Throws AllZero if every
  // coefficient vanishes.
  static Quadric from_coefficients(double a11, double a22, double a33, double a12,
                                   double a13, double a23, double b1, double b2,
                                   double b3, double c);
  static Quadric from_parts(const Sym3& a, const Vec3& b, double c);

  const Sym3& quadratic() const { return a_; }
  const Vec3& linear() const { return b_; }
  double constant() const { return c_; }

  double evaluate(const Vec3& p) const;
  Mat4 matrix() const;
  // Largest entry magnitude of the homogeneous matrix; the scale every
  // relative band is anchored to.
  double scale() const;
  Quadric negated() const { return from_parts({-a_.a11, -a_.a22, -a_.a33, -a_.a12, -a_.a13, -a_.a23}, -b_, -c_); }

 private:
  Sym3 a_;
  Vec3 b_;
  double c_ = 0;
};

// Proper rigid motion p -> R p + t with R validated orthogonal, det +1.
struct RigidMotion {
  Mat3 rotation = Mat3::identity();
  Vec3 translation;

  static RigidMotion identity() { return {}; }
  // Throws InvalidMotion when max-norm of R^T R - I exceeds tol or det(R)
  // is not +1 within tol.
  static RigidMotion validated(const Mat3& r, const Vec3& t, double tol = 1e-9);
  static RigidMotion translate(const Vec3& t) { return {Mat3::identity(), t}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  // Composition: (m.then(n))(p) == n(m(p)).
  RigidMotion then(const RigidMotion& n) const;
  RigidMotion inverse() const;
};

// Pushes a quadric through a motion: transform(q, m) vanishes exactly on
// the image m(S) of q's zero set S, i.e. evaluates at m(p) to q at p.
Quadric transform(const Quadric& q, const RigidMotion& m);

// Translates q so the linear part vanishes along every non-degenerate
// principal direction. Same surface class in a better-scaled matrix: raw
// entries grow like |center|^2 while every classification invariant stays
// put, so banded sign tests run on the recentred copy.
Quadric recentred(const Quadric& q, const Tolerances& tol = {});

// An ellipsoid with cached reduced-form data. Construction is the one
// place a sign flip is applied: the stored quadric always has positive
// definite quadratic part (interior negative), and the flip is recorded.
class Ellipsoid {
 public:
  // Throws NotAnEllipsoid unless the quadric classifies as an ellipsoid.
  static Ellipsoid from_quadric(const Quadric& q, const Tolerances& tol = {});
  // Axis-aligned ellipsoid with semi-axes (a, b, c) at a center, then moved.
  static Ellipsoid canonical(double a, double b, double c,
                             const RigidMotion& m = RigidMotion::identity());

  const Quadric& normalized() const { return q_; }
  bool sign_flipped() const { return flipped_; }

  // Reduced-form parameters: eigenvalue reciprocals alpha' >= beta' >= gamma'
  // and the homogeneous size factor delta'.
  double alpha_p() const { return ap_; }
  double beta_p() const { return bp_; }
  double gamma_p() const { return gp_; }
  double delta_p() const { return dp_; }
  // Semi-axes alpha >= beta >= gamma.
  double alpha() const { return ap_ * dp_; }
  double beta() const { return bp_ * dp_; }
  double gamma() const { return gp_ * dp_; }

  const Vec3& center() const { return center_; }
  // Columns are unit principal directions matching (alpha, beta, gamma).
  const Mat3& axes() const { return axes_; }
  double det() const { return det_; }

  Ellipsoid moved(const RigidMotion& m) const;

 private:
  Quadric q_;
  bool flipped_ = false;
  double ap_ = 0, bp_ = 0, gp_ = 0, dp_ = 0;
  Vec3 center_;
  Mat3 axes_;
  double det_ = 0;
};

}  // namespace qc
