// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/plane.hpp"

#include <cmath>

#include "qcontact/errors.hpp"
#include "qcontact/pencil.hpp"

namespace qc {

Plane Plane::make(const Vec3& n, double d) {
  if (n.max_abs() == 0.0) fail(Errc::Parse, "plane normal is zero");
  return {n, d};
}

Quadric Plane::to_quadric() const {
  // n . x - d = 0 with the 2 b . x + c convention: b = n / 2, c = -d.
  return Quadric::from_parts(Sym3{}, n * 0.5, -d);
}

PlaneReport plane_contact(const Ellipsoid& e, const Plane& p, const Tolerances& tol) {
  PlaneReport r;
  // Evaluate with the ellipsoid center at the origin: the coefficients are
  // unchanged by a common translation but the entry scales stay honest.
  const RigidMotion shift = RigidMotion::translate(-e.center());
  const Quadric es = transform(e.normalized(), shift);
  const Quadric ps = transform(p.to_quadric(), shift);
  r.poly = char_poly(es, ps);
  // c1 and c0 vanish structurally (rank-2 plane matrix) but carry stencil
  // noise; snap everything below its floor to zero before the discriminants
  // so d3 collapses cleanly to c2^2 c3^2 - 4 c4 c2^3.
  QuarticPoly snapped = r.poly;
  double floors[5];
  coeff_floors(r.poly, ps.scale(), tol.coeff_rel, floors);
  double* cs[5] = {&snapped.c0, &snapped.c1, &snapped.c2, &snapped.c3, &snapped.c4};
  for (int k = 0; k < 5; ++k)
    if (std::fabs(*cs[k]) <= floors[k]) *cs[k] = 0.0;
  Discriminants d = discriminants(snapped, tol);
  r.d3 = d.d3;
  r.s3 = d.s3;
  r.sc3 = banded_sign(r.poly.c3, floors[3]);
  if (r.s3 == Sign::Negative) {
    r.transversal = true;
    r.region = Region::Straddling;
    return r;
  }
  if (r.sc3 == Sign::Positive)
    r.region = Region::RPlus;
  else if (r.sc3 == Sign::Negative)
    r.region = Region::RMinus;
  else
    r.region = Region::Indeterminate;  // touching configurations at band edge
  return r;
}

Sign side_of_plane(const Plane& pl, const Vec3& p, const Tolerances& tol) {
  double v = pl.n.dot(p) - pl.d;
  double band = tol.eps_rel * (pl.n.norm() * p.norm() + std::fabs(pl.d));
  return banded_sign(v, band);
}

Plane plane_from_quadric(const Quadric& q, const Tolerances& tol) {
  const double scale = q.scale();
  if (q.quadratic().max_abs() <= tol.eps_rel * scale) {
    Vec3 n = q.linear() * 2.0;
    if (n.max_abs() <= tol.eps_rel * scale)
      fail(Errc::NotAPlane, "quadric has no linear part");
    return Plane::make(n, -q.constant());
  }
  // Doubled plane s (x . u - t)^2 = 0: A = s u u^T, b = -s t u, c = s t^2.
  EigenSym3 es = eigen_sym3(q.quadratic());
  double s = std::fabs(es.val[0]) >= std::fabs(es.val[2]) ? es.val[0] : es.val[2];
  Vec3 u = std::fabs(es.val[0]) >= std::fabs(es.val[2]) ? es.vec.col(0) : es.vec.col(2);
  // The other eigenvalues must vanish and the bordered parts must agree.
  double residual = std::fabs(es.val[0]) >= std::fabs(es.val[2])
                        ? std::max(std::fabs(es.val[1]), std::fabs(es.val[2]))
                        : std::max(std::fabs(es.val[0]), std::fabs(es.val[1]));
  if (residual > tol.eps_rel * scale)
    fail(Errc::NotAPlane, "quadratic part is not a rank-one projector");
  double t = -q.linear().dot(u) / s;
  // The whole linear part must be -s t u; a residual orthogonal to u means
  // a parabolic term, not a plane.
  Vec3 db = q.linear() + u * (s * t);
  if (db.max_abs() > tol.eps_rel * scale)
    fail(Errc::NotAPlane, "linear part is not aligned with the projector axis");
  if (std::fabs(q.constant() - s * t * t) > tol.eps_rel * std::max(1.0, scale) +
                                                tol.eps_rel * scale * t * t)
    fail(Errc::NotAPlane, "constant term does not complete a square");
  return Plane::make(u, t);
}

}  // namespace qc
