// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>

namespace qc {

// Central tolerance policy. Every zero test in the library is a banded sign
// against a band derived from one of these two knobs and a problem scale.
struct Tolerances {
  // Relative band for determinants, minors and eigenvalue zero tests.
  // A degree-k minor of a matrix with scale s uses band eps_rel * s^k.
  double eps_rel = 1e-9;
  // Relative band for discriminant sign classification: each discriminant
  // is banded by disc_rel times the sum of the absolute values of its own
  // monomials, a running error bound that scales exactly like the value.
  double disc_rel = 1e-7;
  // Relative noise floor for pencil coefficient signs. The coefficients
  // come from five determinant evaluations; every coefficient but the
  // constant term inherits the worst of their rounding errors, bounded by
  // coeff_rel times sum_j |c_j| 2^j, while the constant term is one
  // determinant evaluated directly and is floored at coeff_rel * sq^4
  // (sq the second argument's entry scale in the recentered frame). The
  // evaluations are accurate to a few thousand ulp, so this sits well
  // above the rounding floor and far below real signals.
  double coeff_rel = 1e-11;
  // Additive slack for smallness comparisons: a check passes when
  // left <= right + small_slack * max(|left|, |right|, 1).
  double small_slack = 1e-9;
  // Orthogonality band for rigid motion validation (max-norm of R^T R - I).
  double motion_tol = 1e-9;
  // Root clustering radius factor: roots closer than cluster * (1 + |root|)
  // are treated as coincident, imaginary parts below it as zero.
  double cluster = 1e-5;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign banded_sign(double v, double band) {
  if (v > band) return Sign::Positive;
  if (v < -band) return Sign::Negative;
  return Sign::Zero;
}

inline char sign_char(Sign s) {
  switch (s) {
    case Sign::Negative: return '-';
    case Sign::Positive: return '+';
    default: return '0';
  }
}

// Comparison with additive slack; used by the smallness checks so that
// boundary configurations pass instead of flapping.
inline bool leq_slack(double left, double right, double slack) {
  return left <= right + slack * std::max({std::fabs(left), std::fabs(right), 1.0});
}

}  // namespace qc
