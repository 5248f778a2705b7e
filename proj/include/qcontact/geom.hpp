// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace qc {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  double max_abs() const;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Mat3 {
  // Row-major.
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  static Mat3 identity();
  Vec3 col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
  Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
  Vec3 operator*(const Vec3& v) const;
  Mat3 operator*(const Mat3& o) const;
  Mat3 transposed() const;
  double det() const;
  double max_abs() const;
};

// Symmetric 3x3 stored as its six unique entries; keeps symmetry exact by
// construction (no near-symmetric drift from transforms).
struct Sym3 {
  double a11 = 0, a22 = 0, a33 = 0, a12 = 0, a13 = 0, a23 = 0;

  double operator()(int i, int j) const;
  Mat3 full() const;
  // Symmetrizes an almost-symmetric product, e.g. R A R^T in floats.
  static Sym3 symmetrized(const Mat3& m);
  Vec3 operator*(const Vec3& v) const;
  double trace() const { return a11 + a22 + a33; }
  double det() const;
  // Sum of the three principal 2x2 minors.
  double minor_sum() const;
  double max_abs() const;
};

// Dense 4x4, used for pencil determinants and homogeneous quadric matrices.
struct Mat4 {
  double m[4][4] = {};
  double max_abs() const;
};

double det3(const Mat3& a);
// Determinant by partially pivoted elimination; takes its argument by value.
double det4(Mat4 a);
// Determinant of the 3x3 minor of a obtained by deleting row r and column c.
double minor3(const Mat4& a, int r, int c);

// Largest |k x k minor| for k = 1..4. b3 bounds every cofactor of the
// determinant, so eps * b1 * b3 is a first-order error band for det4 that
// stays sharp on graded matrices where eps * b1^4 is hopeless.
struct MinorScales {
  double b1 = 0, b2 = 0, b3 = 0, b4 = 0;
};
MinorScales minor_scales(const Mat4& a);

// Numerical rank by the cascaded ratio test: rank >= k when the best k x k
// minor exceeds eps_rel * b1 * (best (k-1) minor). Scale-invariant and
// tolerant of graded entries (eccentric shapes).
int rank4(const Mat4& a, double eps_rel);

// Eigenvalues of a symmetric 3x3, descending. Jacobi under the hood: the
// trigonometric closed form loses half its digits on degenerate spectra,
// which surfaces of revolution hit constantly.
void eigenvalues_sym3(const Sym3& a, double out[3]);

struct EigenSym3 {
  double val[3];  // descending
  Mat3 vec;       // columns are the matching unit eigenvectors, det +1
};

// Cyclic Jacobi with eigenvectors; used where principal directions are
// needed (ellipsoid axes, sampling grids).
EigenSym3 eigen_sym3(const Sym3& a);

// Solves A x = b for symmetric A by pivoted elimination. Caller guarantees
// A is nonsingular at the working tolerance.
Vec3 solve3(const Sym3& a, const Vec3& b);

}  // namespace qc
