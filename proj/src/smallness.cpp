// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/smallness.hpp"

#include "qcontact/errors.hpp"

namespace qc {

namespace {

SmallnessCheck geq(const char* name, double left, double right, double slack) {
  return {name, '>', left, right, leq_slack(right, left, slack)};
}

SmallnessCheck leq(const char* name, double left, double right, double slack) {
  return {name, '<', left, right, leq_slack(left, right, slack)};
}

SmallnessVerdict finish(QuadricClass cls, std::initializer_list<SmallnessCheck> checks) {
  SmallnessVerdict v;
  v.cls = cls;
  v.small = true;
  for (const SmallnessCheck& c : checks) {
    v.checks[v.n_checks++] = c;
    v.small = v.small && c.passed;
  }
  return v;
}

}  // namespace

SmallnessVerdict is_small(const Ellipsoid& e, const Quadric& q, const Tolerances& tol) {
  const ReducedForm rf = reduced_form(q, tol);
  const double al = e.alpha_p(), ga = e.gamma_p(), de = e.delta_p();
  const double cap = ga / (de * al * al);  // minimum curvature bound of E
  const double diam = de * al;             // largest semi-axis of E
  const double sl = tol.small_slack;
  const double a = rf.ax[0], b = rf.ax[1], c = rf.ax[2];

  switch (rf.cls) {
    case QuadricClass::Ellipsoid:
      return finish(rf.cls, {geq("size", rf.d * c, diam, sl),
                             leq("curvature", a / (rf.d * c * c), cap, sl)});
    case QuadricClass::HyperboloidOneSheet:
      return finish(rf.cls, {geq("size", b * rf.d, diam, sl),
                             leq("curvature", a / (rf.d * c * c), cap, sl)});
    case QuadricClass::HyperboloidTwoSheets:
      return finish(rf.cls, {geq("size", c * rf.d, diam, sl),
                             leq("curvature", c / (rf.d * c * c), cap, sl)});
    case QuadricClass::EllipticParaboloid:
    case QuadricClass::HyperbolicParaboloid:
      return finish(rf.cls, {leq("curvature", 2.0 / (rf.L * b * b), cap, sl)});
    case QuadricClass::EllipticCylinder:
    case QuadricClass::HyperbolicCylinder:
      return finish(rf.cls, {geq("size", rf.M * b, diam, sl),
                             leq("curvature", a / (rf.M * b * b), cap, sl)});
    case QuadricClass::ParabolicCylinder:
      return finish(rf.cls, {leq("curvature", 2.0 / (rf.d * a * a), cap, sl)});
    case QuadricClass::ParallelPlanes:
      return finish(rf.cls, {geq("size", a * rf.d, al * de, sl)});
    default:
      fail(Errc::UnsupportedClass,
           std::string("smallness is undefined for class ") + to_string(rf.cls));
  }
}

SmallnessVerdict is_small_standard(double alpha, double beta, double gamma,
                                   QuadricClass cls, double a, double b, double c,
                                   const Tolerances& tol) {
  if (!(alpha >= beta && beta >= gamma && gamma > 0))
    fail(Errc::BadOrdering, "ellipsoid semi-axes must satisfy alpha >= beta >= gamma > 0");
  const double cap = gamma / (alpha * alpha);
  const double sl = tol.small_slack;

  auto need = [&](bool ok, const char* what) {
    if (!ok) fail(Errc::BadOrdering, what);
  };

  switch (cls) {
    case QuadricClass::Ellipsoid:
      need(a >= b && b >= c && c > 0, "ellipsoid parameters must satisfy a >= b >= c > 0");
      return finish(cls, {geq("size", c, alpha, sl),
                          leq("curvature", a / (c * c), cap, sl)});
    case QuadricClass::HyperboloidOneSheet:
      need(a >= b && b > 0 && c > 0, "hyperboloid parameters must satisfy a >= b > 0, c > 0");
      return finish(cls, {geq("size", b, alpha, sl),
                          leq("curvature", a / (c * c), cap, sl)});
    case QuadricClass::HyperboloidTwoSheets:
      need(a >= b && b > 0 && c > 0, "hyperboloid parameters must satisfy a >= b > 0, c > 0");
      return finish(cls, {geq("size", c, alpha, sl),
                          leq("curvature", c / (a * a), cap, sl)});
    case QuadricClass::EllipticParaboloid:
    case QuadricClass::HyperbolicParaboloid:
      need(a >= b && b > 0, "paraboloid parameters must satisfy a >= b > 0");
      return finish(cls, {leq("curvature", 2.0 / (b * b), cap, sl)});
    case QuadricClass::EllipticCylinder:
      need(a >= b && b > 0, "cylinder parameters must satisfy a >= b > 0");
      return finish(cls, {geq("size", b, alpha, sl),
                          leq("curvature", a / (b * b), cap, sl)});
    case QuadricClass::HyperbolicCylinder:
      need(a > 0 && b > 0, "cylinder parameters must be positive");
      return finish(cls, {geq("size", a, alpha, sl),
                          leq("curvature", a / (b * b), cap, sl)});
    case QuadricClass::ParabolicCylinder:
      need(a > 0, "cylinder parameter must be positive");
      return finish(cls, {leq("curvature", 2.0 / (a * a), cap, sl)});
    case QuadricClass::ParallelPlanes:
      need(a > 0, "plane pair parameter must be positive");
      return finish(cls, {geq("size", a, alpha, sl)});
    default:
      fail(Errc::UnsupportedClass,
           std::string("smallness is undefined for class ") + to_string(cls));
  }
}

}  // namespace qc
