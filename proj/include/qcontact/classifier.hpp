// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "qcontact/pencil.hpp"
#include "qcontact/quadric.hpp"
#include "qcontact/smallness.hpp"

namespace qc {

// Subdiscriminants of the quartic, with banded signs. Each band is
// disc_rel times the sum of the absolute monomials of the same formula
// (the running error bound of the evaluation), so it is covariant under
// scaling either pencil argument and stays sharp on graded coefficients.
struct Discriminants {
  double d3 = 0, d4 = 0;
  double band3 = 0, band4 = 0;  // the absolute bands the signs were read at
  Sign s3 = Sign::Zero, s4 = Sign::Zero;
};

Discriminants discriminants(const QuarticPoly& p, const Tolerances& tol = {});

enum class Region { RMinus, RPlus, Straddling, Indeterminate };
const char* to_string(Region r);

// Relative position of a non-crossing configuration, from banded coefficient
// signs alone. `orientation` is the factor aligning q with its canonical
// matrix; `changes` the Descartes count of the stripped, oriented sequence.
// When neither table row fits, region is Indeterminate and `mismatch`
// carries both expected counts (numerical-trouble signal, not an error).
struct PositionReport {
  Region region = Region::Indeterminate;
  std::string signs;      // banded signs of (c4..c0), caller orientation
  int orientation = 1;    // +1/-1
  int changes = 0;
  int structural_zeros = 0;
  std::string mismatch;   // empty when a row matched
};

PositionReport relative_position(const Ellipsoid& e, const Quadric& q,
                                 const QuarticPoly& p, const Tolerances& tol = {});

// Full contact query: characteristic polynomial, discriminant verdict,
// smallness gate and, for non-crossing configurations, the region.
struct ContactReport {
  bool transversal = false;
  // True when the verdict is trustworthy: a positive verdict always is
  // (non-real roots force crossing for any pair); a negative one only under
  // smallness.
  bool conclusive = false;
  Region region = Region::Indeterminate;
  // Set when d4 = 0 with d3 >= 0: tangency and separation share that
  // signature, the discriminants cannot split them.
  bool tangency_possible = false;
  QuarticPoly poly;
  Discriminants disc;
  SmallnessVerdict smallness;
  bool smallness_known = false;  // false when the class has no smallness notion
  PositionReport position;
  bool position_known = false;
};

// require_smallness = true refuses to answer (SmallnessViolated) when the
// smallness condition fails; with false the check is still attempted and
// reported, and a negative verdict is marked inconclusive when it failed.
ContactReport is_transversal_contact(const Ellipsoid& e, const Quadric& q,
                                     bool require_smallness = true,
                                     const Tolerances& tol = {});

// Variant taking a precomputed smallness verdict (smallness is
// motion-invariant, so callers moving one shape around may reuse it);
// nullptr means the class supports no smallness notion.
ContactReport is_transversal_contact(const Ellipsoid& e, const Quadric& q,
                                     bool require_smallness, const Tolerances& tol,
                                     const SmallnessVerdict* known);

}  // namespace qc
