// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qcontact/quadric.hpp"

namespace qc {

// Coefficients of c4 l^4 + c3 l^3 + c2 l^2 + c1 l + c0.
struct QuarticPoly {
  double c4 = 0, c3 = 0, c2 = 0, c1 = 0, c0 = 0;
  double operator[](int k) const {
    switch (k) {
      case 0: return c0;
      case 1: return c1;
      case 2: return c2;
      case 3: return c3;
      default: return c4;
    }
  }
  double max_abs() const;
};

// det(l E + Q), degree 4 in l. c4 = det(E), c0 = det(Q), and swapping the
// arguments reverses the coefficient order. Computed from five pivoted
// determinant evaluations at l in {-2,-1,0,1,2} and the exact inverse of
// that interpolation; entries above 1e6 trigger a power-of-two prescale of
// each matrix, undone exactly on the coefficients.
QuarticPoly char_poly(const Quadric& e, const Quadric& q);

// Horner evaluation.
double eval_quartic(const QuarticPoly& p, double lambda);

// Absolute rounding floors of the pencil coefficients, rel units above the
// noise of the determinant stencil behind char_poly. Every coefficient but
// c0 mixes the five determinants, each bounded by sum_j |c_j| 2^j, so that
// sum is their shared floor; c0 is the lambda = 0 determinant itself and is
// floored by the fourth power of the second argument's entry scale sq.
// Values at or below floors[k] carry no trustworthy sign.
void coeff_floors(const QuarticPoly& p, double sq, double rel, double floors[5]);

}  // namespace qc
