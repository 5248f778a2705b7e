// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "qcontact/errors.hpp"

namespace qc {

InvariantSet invariant_set(const Quadric& q) {
  InvariantSet s;
  Mat4 m = q.matrix();
  s.detQ = det4(m);
  eigenvalues_sym3(q.quadratic(), s.mu);
  s.trQ00 = s.mu[0] + s.mu[1] + s.mu[2];
  s.detQ00 = s.mu[0] * s.mu[1] * s.mu[2];
  s.J = q.quadratic().minor_sum();
  s.K = minor3(m, 0, 0) + minor3(m, 1, 1) + minor3(m, 2, 2);
  const Sym3& a = q.quadratic();
  const Vec3& b = q.linear();
  double c = q.constant();
  s.Jp = (a.a11 * c - b.x * b.x) + (a.a22 * c - b.y * b.y) + (a.a33 * c - b.z * b.z);
  return s;
}

namespace {

struct Signature {
  int pos = 0, neg = 0, zero = 0;
};

Signature eigen_signature(const double mu[3], double band) {
  Signature s;
  for (int i = 0; i < 3; ++i) {
    switch (banded_sign(mu[i], band)) {
      case Sign::Positive: ++s.pos; break;
      case Sign::Negative: ++s.neg; break;
      default: ++s.zero; break;
    }
  }
  return s;
}

// Eigenvalues of s*A, descending, from those of A.
void flipped_eigs(const double mu[3], int s, double out[3]) {
  if (s > 0) {
    out[0] = mu[0];
    out[1] = mu[1];
    out[2] = mu[2];
  } else {
    out[0] = -mu[2];
    out[1] = -mu[1];
    out[2] = -mu[0];
  }
}

}  // namespace

QuadricClass classify(const Quadric& q0, const Tolerances& tol) {
  // Classify the recentred copy: all invariants agree, but banded sign
  // tests anchor to a matrix whose scale no longer grows with |center|^2.
  const Quadric q = recentred(q0, tol);
  const double scale = q.scale();
  const double band = tol.eps_rel * scale;
  InvariantSet inv = invariant_set(q);
  Signature sig = eigen_signature(inv.mu, band);

  if (sig.pos == 0 && sig.neg == 0) {
    // No quadratic part at the working tolerance.
    if (q.linear().max_abs() > band) return QuadricClass::SinglePlane;
    return QuadricClass::Other;  // constant equation, empty or everything
  }

  Mat4 m = q.matrix();
  MinorScales ms = minor_scales(m);
  int rank = rank4(m, tol.eps_rel);
  // Cofactor-scaled band: sharp even when eccentricity grades the entries.
  Sign sdet = banded_sign(inv.detQ, tol.eps_rel * ms.b1 * ms.b3);
  const bool definite = (sig.pos == 3 || sig.neg == 3);
  const bool mixed_pair = (sig.pos == 2 && sig.neg == 1) || (sig.pos == 1 && sig.neg == 2);
  const bool same_pair = (sig.zero == 1) && (sig.pos == 2 || sig.neg == 2);
  const bool opposite_pair = sig.pos == 1 && sig.neg == 1 && sig.zero == 1;
  const bool single = sig.zero == 2;

  if (definite) {
    // detQ < 0 is the real ellipsoid; > 0 is imaginary, = 0 a point.
    if (sdet == Sign::Negative) return QuadricClass::Ellipsoid;
    return QuadricClass::Other;
  }
  if (mixed_pair) {
    if (sdet == Sign::Zero) return QuadricClass::Cone;
    return sdet == Sign::Positive ? QuadricClass::HyperboloidOneSheet
                                  : QuadricClass::HyperboloidTwoSheets;
  }
  if (same_pair) {
    if (rank == 4) return QuadricClass::EllipticParaboloid;
    if (rank == 3) {
      // Real iff the squared cross-section radius -K/J of the oriented
      // matrix is positive (K flips with the matrix sign, J does not).
      int s = sig.pos == 2 ? 1 : -1;
      double m2 = -(s * inv.K) / inv.J;
      if (banded_sign(m2, tol.eps_rel * scale) == Sign::Positive)
        return QuadricClass::EllipticCylinder;
      return QuadricClass::Other;
    }
    return QuadricClass::Other;  // rank 2: a single line
  }
  if (opposite_pair) {
    if (rank == 4) return QuadricClass::HyperbolicParaboloid;
    if (rank == 3) return QuadricClass::HyperbolicCylinder;
    return QuadricClass::IntersectingPlanes;
  }
  if (single) {
    if (rank == 3) return QuadricClass::ParabolicCylinder;
    if (rank == 2) {
      // J' < 0 separates real parallel planes from the imaginary pair;
      // J' is even under a matrix sign flip.
      if (banded_sign(inv.Jp, tol.eps_rel * scale * scale) == Sign::Negative)
        return QuadricClass::ParallelPlanes;
      return QuadricClass::Other;
    }
    return QuadricClass::SinglePlane;  // rank 1: a doubled plane
  }
  return QuadricClass::Other;
}

ReducedForm reduced_form(const Quadric& q0, const Tolerances& tol) {
  QuadricClass cls = classify(q0, tol);
  const Quadric q = recentred(q0, tol);
  InvariantSet inv = invariant_set(q);
  ReducedForm r{};
  r.cls = cls;
  r.sign = 1;
  double e[3];

  auto need_positive = [&](double v, const char* what) {
    if (!(v > 0)) fail(Errc::Degenerate, std::string(what) + " is not positive");
    return v;
  };

  switch (cls) {
    case QuadricClass::Ellipsoid: {
      r.sign = inv.mu[0] > 0 ? 1 : -1;
      flipped_eigs(inv.mu, r.sign, e);
      r.ax[0] = 1.0 / std::sqrt(e[2]);
      r.ax[1] = 1.0 / std::sqrt(e[1]);
      r.ax[2] = 1.0 / std::sqrt(e[0]);
      double d2 = -r.ax[0] * r.ax[0] * r.ax[1] * r.ax[1] * r.ax[2] * r.ax[2] * inv.detQ;
      r.d = std::sqrt(need_positive(d2, "ellipsoid d'^2"));
      return r;
    }
    case QuadricClass::HyperboloidOneSheet:
    case QuadricClass::HyperboloidTwoSheets: {
      Signature sig = eigen_signature(inv.mu, tol.eps_rel * q.scale());
      r.sign = sig.pos == 2 ? 1 : -1;
      flipped_eigs(inv.mu, r.sign, e);
      // e[0] >= e[1] > 0 > e[2].
      r.ax[0] = 1.0 / std::sqrt(e[1]);
      r.ax[1] = 1.0 / std::sqrt(e[0]);
      r.ax[2] = 1.0 / std::sqrt(-e[2]);
      double p2 = r.ax[0] * r.ax[0] * r.ax[1] * r.ax[1] * r.ax[2] * r.ax[2] * inv.detQ;
      if (cls == QuadricClass::HyperboloidTwoSheets) p2 = -p2;
      r.d = std::sqrt(need_positive(p2, "hyperboloid d'^2"));
      return r;
    }
    case QuadricClass::EllipticParaboloid: {
      Signature sig = eigen_signature(inv.mu, tol.eps_rel * q.scale());
      r.sign = sig.pos == 2 ? 1 : -1;
      flipped_eigs(inv.mu, r.sign, e);
      r.ax[0] = 1.0 / std::sqrt(e[1]);
      r.ax[1] = 1.0 / std::sqrt(e[0]);
      r.L = std::sqrt(need_positive(-4.0 * inv.detQ / inv.J, "paraboloid L^2"));
      return r;
    }
    case QuadricClass::HyperbolicParaboloid: {
      double ep = std::max(inv.mu[0], 0.0), en = std::min(inv.mu[2], 0.0);
      double p = 1.0 / std::sqrt(need_positive(ep, "positive eigenvalue"));
      double m = 1.0 / std::sqrt(need_positive(-en, "negative eigenvalue"));
      // Canonical orientation puts the wider parabola first: a' >= b'.
      if (p >= m) {
        r.sign = 1;
        r.ax[0] = p;
        r.ax[1] = m;
      } else {
        r.sign = -1;
        r.ax[0] = m;
        r.ax[1] = p;
      }
      r.L = std::sqrt(need_positive(-4.0 * inv.detQ / inv.J, "paraboloid L^2"));
      return r;
    }
    case QuadricClass::EllipticCylinder: {
      Signature sig = eigen_signature(inv.mu, tol.eps_rel * q.scale());
      r.sign = sig.pos == 2 ? 1 : -1;
      flipped_eigs(inv.mu, r.sign, e);
      r.ax[0] = 1.0 / std::sqrt(e[1]);
      r.ax[1] = 1.0 / std::sqrt(e[0]);
      r.M = std::sqrt(need_positive(-(r.sign * inv.K) / inv.J, "cylinder M^2"));
      return r;
    }
    case QuadricClass::HyperbolicCylinder: {
      // Orientation is forced by M^2 = -K/J > 0 for the oriented matrix.
      double m2 = -inv.K / inv.J;
      r.sign = m2 > 0 ? 1 : -1;
      flipped_eigs(inv.mu, r.sign, e);
      r.ax[0] = 1.0 / std::sqrt(need_positive(e[0], "positive eigenvalue"));
      r.ax[1] = 1.0 / std::sqrt(need_positive(-e[2], "negative eigenvalue"));
      r.M = std::sqrt(need_positive(-(r.sign * inv.K) / inv.J, "cylinder M^2"));
      return r;
    }
    case QuadricClass::ParabolicCylinder: {
      r.sign = inv.mu[0] > -inv.mu[2] ? 1 : -1;
      flipped_eigs(inv.mu, r.sign, e);
      r.ax[0] = 1.0 / std::sqrt(need_positive(e[0], "leading eigenvalue"));
      r.d = std::sqrt(need_positive(-4.0 * (r.sign * inv.K) * r.ax[0] * r.ax[0],
                                    "parabolic cylinder d'^2"));
      return r;
    }
    case QuadricClass::ParallelPlanes: {
      r.sign = inv.mu[0] > -inv.mu[2] ? 1 : -1;
      flipped_eigs(inv.mu, r.sign, e);
      r.ax[0] = 1.0 / std::sqrt(need_positive(e[0], "leading eigenvalue"));
      r.d = std::sqrt(need_positive(-r.ax[0] * r.ax[0] * inv.Jp, "plane pair d'^2"));
      return r;
    }
    default:
      fail(Errc::UnsupportedClass,
           std::string("no reduced form for class ") + to_string(cls));
  }
}

}  // namespace qc
