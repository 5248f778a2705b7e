// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/geom.hpp"

#include <algorithm>
#include <cmath>

namespace qc {

double Vec3::max_abs() const {
  return std::max({std::fabs(x), std::fabs(y), std::fabs(z)});
}

Mat3 Mat3::identity() {
  Mat3 r;
  r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

double Mat3::det() const { return det3(*this); }

double Mat3::max_abs() const {
  double s = 0;
  for (auto& row : m)
    for (double v : row) s = std::max(s, std::fabs(v));
  return s;
}

double Sym3::operator()(int i, int j) const {
  if (i == j) return i == 0 ? a11 : (i == 1 ? a22 : a33);
  int lo = std::min(i, j), hi = std::max(i, j);
  if (lo == 0) return hi == 1 ? a12 : a13;
  return a23;
}

Mat3 Sym3::full() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (*this)(i, j);
  return r;
}

Sym3 Sym3::symmetrized(const Mat3& m) {
  Sym3 s;
  s.a11 = m.m[0][0];
  s.a22 = m.m[1][1];
  s.a33 = m.m[2][2];
  s.a12 = 0.5 * (m.m[0][1] + m.m[1][0]);
  s.a13 = 0.5 * (m.m[0][2] + m.m[2][0]);
  s.a23 = 0.5 * (m.m[1][2] + m.m[2][1]);
  return s;
}

Vec3 Sym3::operator*(const Vec3& v) const {
  return {a11 * v.x + a12 * v.y + a13 * v.z,
          a12 * v.x + a22 * v.y + a23 * v.z,
          a13 * v.x + a23 * v.y + a33 * v.z};
}

double Sym3::det() const {
  return a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
         a13 * (a12 * a23 - a22 * a13);
}

double Sym3::minor_sum() const {
  return (a11 * a22 - a12 * a12) + (a11 * a33 - a13 * a13) + (a22 * a33 - a23 * a23);
}

double Sym3::max_abs() const {
  return std::max({std::fabs(a11), std::fabs(a22), std::fabs(a33), std::fabs(a12),
                   std::fabs(a13), std::fabs(a23)});
}

double Mat4::max_abs() const {
  double s = 0;
  for (auto& row : m)
    for (double v : row) s = std::max(s, std::fabs(v));
  return s;
}

double det3(const Mat3& a) {
  const auto& m = a.m;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double det4(Mat4 a) {
  double det = 1.0;
  for (int k = 0; k < 4; ++k) {
    int piv = k;
    for (int i = k + 1; i < 4; ++i)
      if (std::fabs(a.m[i][k]) > std::fabs(a.m[piv][k])) piv = i;
    if (a.m[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap(a.m[piv], a.m[k]);
      det = -det;
    }
    det *= a.m[k][k];
    for (int i = k + 1; i < 4; ++i) {
      double f = a.m[i][k] / a.m[k][k];
      for (int j = k + 1; j < 4; ++j) a.m[i][j] -= f * a.m[k][j];
    }
  }
  return det;
}

double minor3(const Mat4& a, int r, int c) {
  Mat3 s;
  int si = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == r) continue;
    int sj = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == c) continue;
      s.m[si][sj++] = a.m[i][j];
    }
    ++si;
  }
  return det3(s);
}

MinorScales minor_scales(const Mat4& a) {
  MinorScales s;
  s.b1 = a.max_abs();
  for (int i0 = 0; i0 < 4; ++i0)
    for (int i1 = i0 + 1; i1 < 4; ++i1)
      for (int j0 = 0; j0 < 4; ++j0)
        for (int j1 = j0 + 1; j1 < 4; ++j1)
          s.b2 = std::max(s.b2,
                          std::fabs(a.m[i0][j0] * a.m[i1][j1] - a.m[i0][j1] * a.m[i1][j0]));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s.b3 = std::max(s.b3, std::fabs(minor3(a, r, c)));
  s.b4 = std::fabs(det4(a));
  return s;
}

int rank4(const Mat4& a, double eps_rel) {
  // Cascaded ratio test, bottom up: rank >= k only counts when rank >= k-1
  // is already genuine, so each b_{k-1} anchor is a real scale and a
  // noise-over-noise ratio at the top can never fake full rank.
  MinorScales s = minor_scales(a);
  if (s.b1 == 0.0 || s.b2 <= eps_rel * s.b1 * s.b1) return s.b1 == 0.0 ? 0 : 1;
  if (s.b3 <= eps_rel * s.b1 * s.b2) return 2;
  if (s.b4 <= eps_rel * s.b1 * s.b3) return 3;
  return 4;
}

void eigenvalues_sym3(const Sym3& a, double out[3]) {
  // Jacobi, not the trigonometric closed form: acos near +-1 costs half the
  // digits exactly when two eigenvalues coincide, and degenerate spectra are
  // routine here (surfaces of revolution). Jacobi is exact on diagonal input
  // and keeps full precision on clusters.
  EigenSym3 es = eigen_sym3(a);
  out[0] = es.val[0];
  out[1] = es.val[1];
  out[2] = es.val[2];
}

EigenSym3 eigen_sym3(const Sym3& a) {
  // Cyclic Jacobi on the full matrix; a handful of sweeps reaches machine
  // precision for 3x3.
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double m[3][3];
  Mat3 f = a.full();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = f.m[i][j];
  double scale = std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = std::fabs(m[0][1]) + std::fabs(m[0][2]) + std::fabs(m[1][2]);
    if (off < 1e-15 * scale) break;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::fabs(m[p][q]) < 1e-18 * scale) continue;
        double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < 3; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < 3; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
        for (int k = 0; k < 3; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  int order[3] = {0, 1, 2};
  std::sort(order, order + 3, [&](int i, int j) { return m[i][i] > m[j][j]; });
  EigenSym3 out;
  for (int k = 0; k < 3; ++k) {
    out.val[k] = m[order[k]][order[k]];
    for (int i = 0; i < 3; ++i) out.vec.m[i][k] = v[i][order[k]];
  }
  if (out.vec.det() < 0)
    for (int i = 0; i < 3; ++i) out.vec.m[i][2] = -out.vec.m[i][2];
  return out;
}

Vec3 solve3(const Sym3& a, const Vec3& b) {
  double m[3][4] = {{a.a11, a.a12, a.a13, b.x},
                    {a.a12, a.a22, a.a23, b.y},
                    {a.a13, a.a23, a.a33, b.z}};
  for (int k = 0; k < 3; ++k) {
    int piv = k;
    for (int i = k + 1; i < 3; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[piv][k])) piv = i;
    if (piv != k)
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[k][j]);
    for (int i = k + 1; i < 3; ++i) {
      double f = m[i][k] / m[k][k];
      for (int j = k; j < 4; ++j) m[i][j] -= f * m[k][j];
    }
  }
  double z = m[2][3] / m[2][2];
  double y = (m[1][3] - m[1][2] * z) / m[1][1];
  double x = (m[0][3] - m[0][1] * y - m[0][2] * z) / m[0][0];
  return {x, y, z};
}

}  // namespace qc
