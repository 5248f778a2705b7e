// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qcontact/quadric.hpp"

namespace qc {

// Euclidean invariants of a quadric Q = [[A, b], [b^T, c]]. mu, detQ,
// detQ00 and J are invariant under every rigid motion. K and Jp are
// semi-invariants: rotation-invariant always, translation-invariant only on
// the degenerate classes that consult them (K when det A = det Q = 0, the
// cylinders and plane pairs; Jp when additionally K = 0). Under Q -> -Q,
// detQ and J are even; mu, detQ00, K and Jp are odd.
struct InvariantSet {
  double detQ;     // det of the 4x4 matrix
  double mu[3];    // eigenvalues of A, descending
  double trQ00;    // trace of A (= mu1 + mu2 + mu3)
  double detQ00;   // det of A  (= mu1 mu2 mu3)
  double J;        // sum of principal 2x2 minors of A
  double K;        // sum of the three 3x3 minors of Q keeping the last row/col
  double Jp;       // sum over i of det [[a_ii, b_i], [b_i, c]]
};

InvariantSet invariant_set(const Quadric& q);

// Classifies by banded eigenvalue signs of A, numerical rank of the 4x4
// matrix and the sign of detQ. Sign-flip safe: classify(q) == classify(-q).
QuadricClass classify(const Quadric& q, const Tolerances& tol = {});

// Reduced-form parameters recovered from invariants only (no diagonalizing
// transform is returned). `sign` is the orientation factor: sign * q has the
// class-canonical matrix orientation. Fields by class:
//   Ellipsoid, H1S, H2S:   ax = {a', b', c'}, d = d'
//   EllipticParaboloid,
//   HyperbolicParaboloid:  ax = {a', b', 0}, L
//   EllipticCylinder,
//   HyperbolicCylinder:    ax = {a', b', 0}, M
//   ParabolicCylinder:     ax = {a', 0, 0}, d = d'
//   ParallelPlanes:        ax = {a', 0, 0}, d = d'
// Throws UnsupportedClass for classes outside this list and Degenerate when
// a squared parameter comes out non-positive.
struct ReducedForm {
  QuadricClass cls;
  int sign;  // +1 or -1
  double ax[3];
  double d = 0, L = 0, M = 0;
};

ReducedForm reduced_form(const Quadric& q, const Tolerances& tol = {});

}  // namespace qc
