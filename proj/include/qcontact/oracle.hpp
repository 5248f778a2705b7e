// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include "qcontact/pencil.hpp"
#include "qcontact/quadric.hpp"

namespace qc {

// Verification machinery, deliberately independent of the discriminant
// route: roots come from companion-matrix eigenvalues, crossing evidence
// from dense surface sampling. Production queries never call into here.

struct RootSet {
  std::complex<double> roots[4];
  int count = 0;             // 4 minus the stripped structural zero roots
  int structural_zeros = 0;  // trailing coefficients treated as exact zeros
  int n_real = 0;
  // True when some root keeps a nonzero imaginary part outside the
  // clustering radius cluster * (1 + |root|).
  bool has_nonreal = false;
};

// Roots of the quartic, sorted by (re, im). Trailing coefficients inside
// the zero band are stripped as structural zero roots (at most two); a
// banded-zero leading coefficient is a LeadingZero error. Near-real roots
// are snapped onto the axis and conjugate pairs symmetrized. strip_floor,
// when given, supplies absolute zero bands for c0 and c1 in place of the
// flat default band.
RootSet quartic_roots(const QuarticPoly& p, const Tolerances& tol = {},
                      const double* strip_floor = nullptr);

// Roots of the contact pencil det(l E + Q). Builds the polynomial in the
// ellipsoid-centered frame and strips structural zeros against the pencil
// coefficient noise floors, which a stiff pencil (tiny ellipsoid against a
// unit-size quadric) needs: its genuine trailing coefficients sit many
// orders below max|c_k| and a flat band would swallow them.
RootSet pencil_roots(const Ellipsoid& e, const Quadric& q, const Tolerances& tol = {});

enum class SampleVerdict { SeparatedSign, MixedSign };

struct SampleResult {
  SampleVerdict verdict = SampleVerdict::SeparatedSign;
  double min = 0, max = 0;  // extrema of the quadric form over the grid
  int grid = 0;
};

// Evaluates q over an n x n spherical-angle grid on the ellipsoid surface.
// MixedSign iff min < -eta and max > eta with eta = 1e-9 * q.scale() *
// (1 + |center|)^2-ish bound kept inside; grids refine crossing evidence,
// never prove separation.
SampleResult sample_intersection(const Ellipsoid& e, const Quadric& q, int n = 512);

// Serial reference implementation with identical arithmetic; the parallel
// kernel must match it bit for bit on min/max.
SampleResult sample_intersection_serial(const Ellipsoid& e, const Quadric& q,
                                        int n = 512);

}  // namespace qc
