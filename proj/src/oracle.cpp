// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "qcontact/errors.hpp"

namespace qc {

namespace {

void companion_roots(const double* c, int n, std::complex<double>* out) {
  // c[0..n] are coefficients from constant to leading, c[n] != 0.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
}

}  // namespace

RootSet quartic_roots(const QuarticPoly& p, const Tolerances& tol,
                      const double* strip_floor) {
  const double band = tol.disc_rel * std::max(1.0, p.max_abs());
  double c[5] = {p.c0, p.c1, p.c2, p.c3, p.c4};
  if (std::fabs(c[4]) <= band)
    fail(Errc::LeadingZero, "quartic leading coefficient is inside the zero band");

  RootSet rs;
  int lo = 0;
  // Strip structural zero roots. The flat band suits hand-scaled input;
  // pencil callers pass explicit per-coefficient floors because a stiff
  // pencil's genuine trailing coefficients sit far below max|c_k|.
  while (lo < 2 &&
         std::fabs(c[lo]) <= (strip_floor ? strip_floor[lo] : band))
    ++lo;
  rs.structural_zeros = lo;
  int n = 4 - lo;
  rs.count = n;

  if (n == 2) {
    // Stable quadratic formula.
    double a = c[lo + 2], b = c[lo + 1], cc = c[lo];
    double disc = b * b - 4 * a * cc;
    if (disc >= 0) {
      double sq = std::sqrt(disc);
      double q = -0.5 * (b + (b >= 0 ? sq : -sq));
      double r0 = q / a;
      double r1 = (q != 0) ? cc / q : 0.0;
      rs.roots[0] = r0;
      rs.roots[1] = r1;
    } else {
      double re = -b / (2 * a), im = std::sqrt(-disc) / (2 * a);
      rs.roots[0] = {re, std::fabs(im)};
      rs.roots[1] = {re, -std::fabs(im)};
    }
  } else {
    companion_roots(c + lo, n, rs.roots);
  }

  // Snap near-real roots, then symmetrize surviving conjugate pairs.
  for (int i = 0; i < n; ++i) {
    double r = tol.cluster * (1.0 + std::abs(rs.roots[i]));
    if (std::fabs(rs.roots[i].imag()) <= r) rs.roots[i] = {rs.roots[i].real(), 0.0};
  }
  for (int i = 0; i < n; ++i) {
    if (rs.roots[i].imag() <= 0) continue;
    int best = -1;
    double bd = 0;
    for (int j = 0; j < n; ++j) {
      if (rs.roots[j].imag() >= 0) continue;
      double d = std::abs(rs.roots[j] - std::conj(rs.roots[i]));
      if (best < 0 || d < bd) {
        best = j;
        bd = d;
      }
    }
    if (best >= 0) {
      double re = 0.5 * (rs.roots[i].real() + rs.roots[best].real());
      double im = 0.5 * (rs.roots[i].imag() - rs.roots[best].imag());
      rs.roots[i] = {re, im};
      rs.roots[best] = {re, -im};
    }
  }
  std::sort(rs.roots, rs.roots + n, [](const std::complex<double>& a,
                                       const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (int i = 0; i < n; ++i)
    if (rs.roots[i].imag() == 0.0) ++rs.n_real;
  rs.has_nonreal = rs.n_real < n;
  return rs;
}

RootSet pencil_roots(const Ellipsoid& e, const Quadric& q, const Tolerances& tol) {
  // Ellipsoid-centered frame: an exact identity on the coefficients that
  // keeps the entry scales, and with them the noise floors, tight.
  const RigidMotion shift = RigidMotion::translate(-e.center());
  const Quadric es = transform(e.normalized(), shift);
  const Quadric qs = transform(q, shift);
  const QuarticPoly p = char_poly(es, qs);
  double floors[5];
  coeff_floors(p, qs.scale(), tol.coeff_rel, floors);
  return quartic_roots(p, tol, floors);
}

namespace {

struct GridScan {
  double mn, mx;
};

GridScan scan_serial(const Ellipsoid& e, const Quadric& q, int n) {
  const Mat3 ax = e.axes();
  const Vec3 c = e.center();
  const double a = e.alpha(), b = e.beta(), g = e.gamma();
  double mn = 0, mx = 0;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    double th = M_PI * i / (n - 1);
    double st = std::sin(th), ct = std::cos(th);
    for (int j = 0; j < n; ++j) {
      double ph = 2.0 * M_PI * j / n;
      Vec3 local{a * st * std::cos(ph), b * st * std::sin(ph), g * ct};
      double v = q.evaluate(c + ax * local);
      if (first) {
        mn = mx = v;
        first = false;
      } else {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
    }
  }
  return {mn, mx};
}

GridScan scan_parallel(const Ellipsoid& e, const Quadric& q, int n) {
  const Mat3 ax = e.axes();
  const Vec3 c = e.center();
  const double a = e.alpha(), b = e.beta(), g = e.gamma();
  double mn = HUGE_VAL, mx = -HUGE_VAL;
#pragma omp parallel for reduction(min : mn) reduction(max : mx) schedule(static)
  for (int i = 0; i < n; ++i) {
    double th = M_PI * i / (n - 1);
    double st = std::sin(th), ct = std::cos(th);
    for (int j = 0; j < n; ++j) {
      double ph = 2.0 * M_PI * j / n;
      Vec3 local{a * st * std::cos(ph), b * st * std::sin(ph), g * ct};
      double v = q.evaluate(c + ax * local);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
  }
  return {mn, mx};
}

SampleResult finish_scan(const Ellipsoid& e, const Quadric& q, int n, GridScan s) {
  SampleResult r;
  r.grid = n;
  r.min = s.mn;
  r.max = s.mx;
  double reach = e.center().norm() + e.alpha();
  double eta = 1e-9 * q.scale() * (1.0 + reach) * (1.0 + reach);
  r.verdict = (s.mn < -eta && s.mx > eta) ? SampleVerdict::MixedSign
                                          : SampleVerdict::SeparatedSign;
  return r;
}

}  // namespace

SampleResult sample_intersection(const Ellipsoid& e, const Quadric& q, int n) {
  return finish_scan(e, q, n, scan_parallel(e, q, n));
}

SampleResult sample_intersection_serial(const Ellipsoid& e, const Quadric& q, int n) {
  return finish_scan(e, q, n, scan_serial(e, q, n));
}

}  // namespace qc
