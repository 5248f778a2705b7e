// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qcontact/invariants.hpp"
#include "qcontact/quadric.hpp"

namespace qc {

// One inequality from the smallness tables, reported as printed there:
// relation '>' means left >= right must hold, '<' means left <= right.
struct SmallnessCheck {
  const char* name;
  char relation;
  double left;
  double right;
  bool passed;
};

struct SmallnessVerdict {
  bool small = false;
  QuadricClass cls = QuadricClass::Other;
  int n_checks = 0;
  SmallnessCheck checks[2];
};

// Invariant-based smallness of e with respect to q: reduced-form parameters
// of both surfaces feed per-class size and curvature inequalities. Boundary
// cases pass (comparisons carry an additive slack). Throws UnsupportedClass
// for cones, intersecting planes and other classes without a smallness
// notion, Degenerate when reduced parameters do not exist.
SmallnessVerdict is_small(const Ellipsoid& e, const Quadric& q,
                          const Tolerances& tol = {});

// Standard-form variant: ellipsoid semi-axes (alpha >= beta >= gamma) against
// a quadric in standard position with parameters (a, b, c) as in the
// canonical equations (unit right-hand side; unit linear coefficient for
// paraboloids). Throws BadOrdering on parameter order violations.
// Note: for the two-sheet hyperboloid and the hyperbolic cylinder the two
// tables this library implements differ; this one uses c/a^2 <= gamma/alpha^2
// resp. a >= alpha, the invariant-based one uses 1/(d'c') resp. M b' >= ...
SmallnessVerdict is_small_standard(double alpha, double beta, double gamma,
                                   QuadricClass cls, double a, double b, double c,
                                   const Tolerances& tol = {});

}  // namespace qc
