// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "qcontact/errors.hpp"
#include "qcontact/invariants.hpp"

namespace qc {

const char* to_string(Region r) {
  switch (r) {
    case Region::RMinus: return "R-";
    case Region::RPlus: return "R+";
    case Region::Straddling: return "straddling";
    case Region::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Discriminants discriminants(const QuarticPoly& p, const Tolerances& tol) {
  const double c4 = p.c4, c3 = p.c3, c2 = p.c2, c1 = p.c1, c0 = p.c0;
  const double t3[7] = {16 * c4 * c4 * c0 * c2,      -18 * c4 * c4 * c1 * c1,
                        -4 * c4 * c2 * c2 * c2,      14 * c4 * c1 * c3 * c2,
                        -6 * c4 * c0 * c3 * c3,      c2 * c2 * c3 * c3,
                        -3 * c1 * c3 * c3 * c3};
  const double t4[16] = {256 * c0 * c0 * c0 * c4 * c4 * c4,
                         -192 * c0 * c0 * c1 * c3 * c4 * c4,
                         -128 * c0 * c0 * c2 * c2 * c4 * c4,
                         144 * c0 * c0 * c2 * c3 * c3 * c4,
                         -27 * c0 * c0 * c3 * c3 * c3 * c3,
                         144 * c0 * c1 * c1 * c2 * c4 * c4,
                         -6 * c0 * c1 * c1 * c3 * c3 * c4,
                         -4 * c1 * c1 * c1 * c3 * c3 * c3,
                         -80 * c0 * c1 * c2 * c2 * c3 * c4,
                         18 * c0 * c1 * c2 * c3 * c3 * c3,
                         16 * c0 * c2 * c2 * c2 * c2 * c4,
                         -4 * c0 * c2 * c2 * c2 * c3 * c3,
                         -27 * c1 * c1 * c1 * c1 * c4 * c4,
                         18 * c1 * c1 * c1 * c2 * c3 * c4,
                         -4 * c1 * c1 * c2 * c2 * c2 * c4,
                         c1 * c1 * c2 * c2 * c3 * c3};
  Discriminants d;
  // Band each value by the sum of its absolute monomials: the rounding
  // error of the expression is a small multiple of that sum, and the sum
  // scales exactly like the value under any rescaling of either pencil
  // argument, which a max-coefficient power band does not.
  double a3 = 0, a4 = 0;
  for (double t : t3) d.d3 += t, a3 += std::fabs(t);
  for (double t : t4) d.d4 += t, a4 += std::fabs(t);
  d.band3 = tol.disc_rel * a3;
  d.band4 = tol.disc_rel * a4;
  d.s3 = banded_sign(d.d3, d.band3);
  d.s4 = banded_sign(d.d4, d.band4);
  return d;
}

namespace {

// Table rows grouped by shared sign behaviour. `strip` is the number of
// structurally zero trailing coefficients, `base` the Descartes count of the
// R- row; the R+ row always has base + 2.
struct PatternGroup {
  int strip;
  int base;
  Sign c0_sign;  // required sign of the surviving constant-side end, or Zero
};

bool pattern_group(QuadricClass cls, PatternGroup& g) {
  switch (cls) {
    case QuadricClass::Ellipsoid:
    case QuadricClass::HyperboloidTwoSheets:
    case QuadricClass::EllipticParaboloid:
      g = {0, 0, Sign::Negative};
      return true;
    case QuadricClass::HyperboloidOneSheet:
    case QuadricClass::HyperbolicParaboloid:
      g = {0, 1, Sign::Positive};
      return true;
    case QuadricClass::EllipticCylinder:
    case QuadricClass::ParabolicCylinder:
      g = {1, 0, Sign::Negative};
      return true;
    case QuadricClass::HyperbolicCylinder:
      g = {1, 1, Sign::Positive};
      return true;
    case QuadricClass::ParallelPlanes:
      g = {2, 0, Sign::Negative};
      return true;
    default:
      return false;
  }
}

}  // namespace

PositionReport relative_position(const Ellipsoid& e, const Quadric& q,
                                 const QuarticPoly& p, const Tolerances& tol) {
  const ReducedForm rf = reduced_form(q, tol);
  PatternGroup g;
  if (!pattern_group(rf.cls, g))
    fail(Errc::UnsupportedClass,
         std::string("no relative-position rule for class ") + to_string(rf.cls));

  PositionReport rep;
  rep.orientation = rf.sign;
  rep.structural_zeros = g.strip;

  // Coefficient signs are read against the pencil noise floors. A flat
  // max-coefficient band would misread the small end of a graded pencil
  // (tiny ellipsoid against a unit-scale quadric) as zero; the floors are
  // the actual rounding level of the determinant stencil instead. The sq
  // scale is taken after translating the quadric by -center(E), matching
  // the frame the polynomial was computed in: a common translation leaves
  // every coefficient unchanged, while raw entries grow like |center|^2
  // and would inflate the floors past genuine leading coefficients.
  const RigidMotion shift = RigidMotion::translate(-e.center());
  const double sq = transform(q, shift).scale();
  double floors[5];
  coeff_floors(p, sq, tol.coeff_rel, floors);
  Sign raw[5], eff[5];
  for (int k = 0; k < 5; ++k)
    raw[k] = banded_sign(p[4 - k], floors[4 - k]);  // c4..c0
  for (int k = 0; k < 5; ++k) {
    // Negating the quadric negates the odd-degree coefficients only.
    bool odd = (4 - k) % 2 == 1;
    eff[k] = (odd && rf.sign < 0) ? static_cast<Sign>(-static_cast<int>(raw[k])) : raw[k];
  }
  for (int k = 0; k < 5; ++k) rep.signs += sign_char(raw[k]);

  auto mismatch = [&](const std::string& why) {
    rep.region = Region::Indeterminate;
    rep.mismatch = why + "; expected " + std::to_string(g.base) + " sign changes for R- or " +
                   std::to_string(g.base + 2) + " for R+ after " +
                   std::to_string(g.strip) + " structural zeros";
    return rep;
  };

  if (eff[0] != Sign::Negative) return mismatch("leading coefficient is not negative");
  for (int k = 0; k < g.strip; ++k)
    if (eff[4 - k] != Sign::Zero)
      return mismatch("structural zero coefficient is not zero at the working band");
  // The surviving constant-side coefficient pins the root-sign pattern.
  if (eff[4 - g.strip] != g.c0_sign)
    return mismatch("constant-side coefficient has the wrong sign");

  // Descartes count on the stripped sequence, skipping interior zeros;
  // for all-real root configurations this equals the positive root count.
  int changes = 0;
  Sign prev = Sign::Zero;
  for (int k = 0; k <= 4 - g.strip; ++k) {
    if (eff[k] == Sign::Zero) continue;
    if (prev != Sign::Zero && eff[k] != prev) ++changes;
    prev = eff[k];
  }
  rep.changes = changes;

  Region canonical;
  if (changes == g.base)
    canonical = Region::RMinus;
  else if (changes == g.base + 2)
    canonical = Region::RPlus;
  else
    return mismatch("sign-change count " + std::to_string(changes) + " matches no row");

  // Report in the caller's sign convention for q.
  if (rf.sign < 0)
    canonical = canonical == Region::RMinus ? Region::RPlus : Region::RMinus;
  rep.region = canonical;
  return rep;
}

ContactReport is_transversal_contact(const Ellipsoid& e, const Quadric& q,
                                     bool require_smallness, const Tolerances& tol) {
  try {
    SmallnessVerdict v = is_small(e, q, tol);
    return is_transversal_contact(e, q, require_smallness, tol, &v);
  } catch (const Error& err) {
    if (err.code() != Errc::UnsupportedClass) throw;
    return is_transversal_contact(e, q, require_smallness, tol, nullptr);
  }
}

ContactReport is_transversal_contact(const Ellipsoid& e, const Quadric& q,
                                     bool require_smallness, const Tolerances& tol,
                                     const SmallnessVerdict* known) {
  ContactReport r;
  if (known) {
    r.smallness = *known;
    r.smallness_known = true;
  }
  if (require_smallness) {
    if (!r.smallness_known)
      fail(Errc::UnsupportedClass, "smallness is undefined for this quadric class");
    if (!r.smallness.small)
      fail(Errc::SmallnessViolated, "ellipsoid is not small with respect to the quadric");
  }

  // Evaluate the pencil with the ellipsoid center at the origin: a common
  // translation leaves every coefficient unchanged in exact arithmetic but
  // removes the |center|^2 entry growth that degrades the determinants.
  const RigidMotion shift = RigidMotion::translate(-e.center());
  const Quadric qs = transform(q, shift);
  r.poly = char_poly(transform(e.normalized(), shift), qs);

  // Coefficients below their noise floor are structurally zero; snapping
  // them before the discriminants keeps d3/d4 frame-stable (a floor-level
  // c1 would otherwise feed terms like c3^2 c2^2 c1^2 and turn one frame's
  // exact zero into another frame's large spurious value).
  QuarticPoly snapped = r.poly;
  double floors[5];
  coeff_floors(r.poly, qs.scale(), tol.coeff_rel, floors);
  double* cs[5] = {&snapped.c0, &snapped.c1, &snapped.c2, &snapped.c3, &snapped.c4};
  for (int k = 0; k < 5; ++k)
    if (std::fabs(*cs[k]) <= floors[k]) *cs[k] = 0.0;
  r.disc = discriminants(snapped, tol);
  r.transversal = r.disc.s4 == Sign::Negative ||
                  (r.disc.s4 == Sign::Zero && r.disc.s3 == Sign::Negative);
  // Non-real roots force crossing for any pair of quadrics; a clean negative
  // needs the smallness hypothesis.
  r.conclusive = r.transversal || (r.smallness_known && r.smallness.small);
  r.tangency_possible = !r.transversal && r.disc.s4 == Sign::Zero;

  if (r.transversal) {
    r.region = Region::Straddling;
  } else {
    try {
      r.position = relative_position(e, q, r.poly, tol);
      r.position_known = true;
      r.region = r.position.region;
    } catch (const Error& err) {
      if (err.code() != Errc::UnsupportedClass && err.code() != Errc::Degenerate) throw;
      r.region = Region::Indeterminate;
    }
  }
  return r;
}

}  // namespace qc
