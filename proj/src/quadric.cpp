// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/quadric.hpp"

#include <algorithm>
#include <cmath>

#include "qcontact/errors.hpp"
#include "qcontact/invariants.hpp"

namespace qc {

const char* to_string(QuadricClass c) {
  switch (c) {
    case QuadricClass::Ellipsoid: return "ellipsoid";
    case QuadricClass::HyperboloidOneSheet: return "hyperboloid-one-sheet";
    case QuadricClass::HyperboloidTwoSheets: return "hyperboloid-two-sheets";
    case QuadricClass::EllipticParaboloid: return "elliptic-paraboloid";
    case QuadricClass::HyperbolicParaboloid: return "hyperbolic-paraboloid";
    case QuadricClass::EllipticCylinder: return "elliptic-cylinder";
    case QuadricClass::HyperbolicCylinder: return "hyperbolic-cylinder";
    case QuadricClass::ParabolicCylinder: return "parabolic-cylinder";
    case QuadricClass::ParallelPlanes: return "parallel-planes";
    case QuadricClass::SinglePlane: return "single-plane";
    case QuadricClass::Cone: return "cone";
    case QuadricClass::IntersectingPlanes: return "intersecting-planes";
    case QuadricClass::Other: return "other";
  }
  return "other";
}

const char* to_string(Errc c) {
  switch (c) {
    case Errc::AllZero: return "AllZero";
    case Errc::InvalidMotion: return "InvalidMotion";
    case Errc::NotAnEllipsoid: return "NotAnEllipsoid";
    case Errc::Degenerate: return "Degenerate";
    case Errc::UnsupportedClass: return "UnsupportedClass";
    case Errc::BadOrdering: return "BadOrdering";
    case Errc::SmallnessViolated: return "SmallnessViolated";
    case Errc::NotAPlane: return "NotAPlane";
    case Errc::NoMatchingZone: return "NoMatchingZone";
    case Errc::LeadingZero: return "LeadingZero";
    case Errc::Parse: return "Parse";
  }
  return "Error";
}

Quadric Quadric::from_coefficients(double a11, double a22, double a33, double a12,
                                   double a13, double a23, double b1, double b2,
                                   double b3, double c) {
  return from_parts({a11, a22, a33, a12, a13, a23}, {b1, b2, b3}, c);
}

Quadric Quadric::from_parts(const Sym3& a, const Vec3& b, double c) {
  Quadric q;
  q.a_ = a;
  q.b_ = b;
  q.c_ = c;
  if (q.scale() == 0.0) fail(Errc::AllZero, "all ten coefficients are zero");
  return q;
}

double Quadric::evaluate(const Vec3& p) const {
  return p.dot(a_ * p) + 2.0 * b_.dot(p) + c_;
}

Mat4 Quadric::matrix() const {
  Mat4 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.m[i][j] = a_(i, j);
  m.m[0][3] = m.m[3][0] = b_.x;
  m.m[1][3] = m.m[3][1] = b_.y;
  m.m[2][3] = m.m[3][2] = b_.z;
  m.m[3][3] = c_;
  return m;
}

double Quadric::scale() const {
  return std::max({a_.max_abs(), b_.max_abs(), std::fabs(c_)});
}

RigidMotion RigidMotion::validated(const Mat3& r, const Vec3& t, double tol) {
  Mat3 g = r.transposed() * r;
  double dev = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dev = std::max(dev, std::fabs(g.m[i][j] - (i == j ? 1.0 : 0.0)));
  if (dev > tol) fail(Errc::InvalidMotion, "rotation part is not orthogonal");
  if (std::fabs(r.det() - 1.0) > tol) fail(Errc::InvalidMotion, "rotation determinant is not +1");
  return {r, t};
}

RigidMotion RigidMotion::then(const RigidMotion& n) const {
  return {n.rotation * rotation, n.rotation * translation + n.translation};
}

RigidMotion RigidMotion::inverse() const {
  Mat3 rt = rotation.transposed();
  return {rt, -(rt * translation)};
}

Quadric transform(const Quadric& q, const RigidMotion& m) {
  // With H the homogeneous matrix of m, the image surface has matrix
  // H^-T Q H^-1; in blocks, A' = R A R^T, b' = R b - A' t,
  // c' = t . A' t - 2 (R b) . t + c.
  const Mat3 r = m.rotation;
  const Vec3 t = m.translation;
  Mat3 ar = q.quadratic().full() * r.transposed();
  Sym3 ap = Sym3::symmetrized(r * ar);
  Vec3 rb = r * q.linear();
  Vec3 bp = rb - ap * t;
  double cp = t.dot(ap * t) - 2.0 * rb.dot(t) + q.constant();
  return Quadric::from_parts(ap, bp, cp);
}

Quadric recentred(const Quadric& q, const Tolerances& tol) {
  EigenSym3 es = eigen_sym3(q.quadratic());
  double sa = std::max(std::fabs(es.val[0]), std::fabs(es.val[2]));
  if (sa == 0.0) return q;
  // Solve A p = b per principal direction, skipping near-null ones: there
  // the division explodes and the linear part is class information
  // (paraboloid axes), not an off-origin artifact.
  Vec3 bw = es.vec.transposed() * q.linear();
  const double floor_eig = tol.eps_rel * sa;
  double pw[3] = {bw.x, bw.y, bw.z};
  for (int i = 0; i < 3; ++i)
    pw[i] = std::fabs(es.val[i]) > floor_eig ? pw[i] / es.val[i] : 0.0;
  Vec3 p = es.vec * Vec3{pw[0], pw[1], pw[2]};
  if (p.max_abs() == 0.0) return q;
  return transform(q, RigidMotion::translate(p));
}

Ellipsoid Ellipsoid::from_quadric(const Quadric& q, const Tolerances& tol) {
  if (classify(q, tol) != QuadricClass::Ellipsoid)
    fail(Errc::NotAnEllipsoid, "quadric does not classify as an ellipsoid");
  Ellipsoid e;
  double mu[3];
  eigenvalues_sym3(q.quadratic(), mu);
  e.flipped_ = mu[0] < 0;  // definite A: all eigenvalues share one sign
  e.q_ = e.flipped_ ? q.negated() : q;
  EigenSym3 es = eigen_sym3(e.q_.quadratic());
  // Largest semi-axis comes from the smallest eigenvalue.
  e.ap_ = 1.0 / std::sqrt(es.val[2]);
  e.bp_ = 1.0 / std::sqrt(es.val[1]);
  e.gp_ = 1.0 / std::sqrt(es.val[0]);
  e.center_ = solve3(e.q_.quadratic(), -e.q_.linear());
  // d'^2 = -det(Q)/det(A) is exactly -q(center), and evaluating there is
  // first-order insensitive to center error (the gradient vanishes). Far
  // placements keep full precision this way; a raw 4x4 determinant loses
  // digits to the |center|^2 entry growth.
  double dp2 = -e.q_.evaluate(e.center_);
  if (!(dp2 > 0)) fail(Errc::Degenerate, "ellipsoid size parameter d'^2 is not positive");
  e.dp_ = std::sqrt(dp2);
  e.det_ = -dp2 / ((e.ap_ * e.ap_) * (e.bp_ * e.bp_) * (e.gp_ * e.gp_));
  // Axis order must match (alpha, beta, gamma): reverse the eigen order.
  for (int i = 0; i < 3; ++i) {
    e.axes_.m[i][0] = es.vec.m[i][2];
    e.axes_.m[i][1] = es.vec.m[i][1];
    e.axes_.m[i][2] = es.vec.m[i][0];
  }
  if (e.axes_.det() < 0)
    for (int i = 0; i < 3; ++i) e.axes_.m[i][2] = -e.axes_.m[i][2];
  return e;
}

Ellipsoid Ellipsoid::canonical(double a, double b, double c, const RigidMotion& m) {
  if (!(a >= b && b >= c && c > 0))
    fail(Errc::BadOrdering, "semi-axes must satisfy a >= b >= c > 0");
  Quadric q = Quadric::from_coefficients(1.0 / (a * a), 1.0 / (b * b), 1.0 / (c * c),
                                         0, 0, 0, 0, 0, 0, -1.0);
  return from_quadric(transform(q, m));
}

Ellipsoid Ellipsoid::moved(const RigidMotion& m) const {
  return from_quadric(transform(q_, m));
}

}  // namespace qc
