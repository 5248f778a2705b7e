// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "qcontact/plane.hpp"
#include "qcontact/quadric.hpp"

namespace qct {

using namespace qc;

// Deterministic per-suite randomness: every property test owns its seed.
struct Rand {
  std::mt19937_64 g;
  explicit Rand(uint64_t seed) : g(seed) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(g);
  }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(g); }
  bool coin() { return pick(2) == 1; }
  Vec3 vec(double a, double b) { return {uniform(a, b), uniform(a, b), uniform(a, b)}; }

  // Uniform random rotation from a unit quaternion.
  Mat3 rotation() {
    std::normal_distribution<double> nd;
    double w = nd(g), x = nd(g), y = nd(g), z = nd(g);
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n, x /= n, y /= n, z /= n;
    Mat3 r;
    r.m[0][0] = 1 - 2 * (y * y + z * z);
    r.m[0][1] = 2 * (x * y - w * z);
    r.m[0][2] = 2 * (x * z + w * y);
    r.m[1][0] = 2 * (x * y + w * z);
    r.m[1][1] = 1 - 2 * (x * x + z * z);
    r.m[1][2] = 2 * (y * z - w * x);
    r.m[2][0] = 2 * (x * z - w * y);
    r.m[2][1] = 2 * (y * z + w * x);
    r.m[2][2] = 1 - 2 * (x * x + y * y);
    return r;
  }

  RigidMotion motion(double tmax = 3.0) {
    return RigidMotion::validated(rotation(), vec(-tmax, tmax));
  }

  Ellipsoid ellipsoid(double lo = 0.2, double hi = 2.0, double tmax = 3.0) {
    double s[3] = {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    if (s[0] < s[1]) std::swap(s[0], s[1]);
    if (s[1] < s[2]) std::swap(s[1], s[2]);
    if (s[0] < s[1]) std::swap(s[0], s[1]);
    return Ellipsoid::canonical(s[0], s[1], s[2], motion(tmax));
  }

  // Generic symmetric quadric with entries in [-m, m].
  Quadric quadric(double m = 2.0) {
    for (;;) {
      Sym3 a{uniform(-m, m), uniform(-m, m), uniform(-m, m),
             uniform(-m, m), uniform(-m, m), uniform(-m, m)};
      Vec3 b = vec(-m, m);
      double c = uniform(-m, m);
      if (a.max_abs() > 0.05 * m) return Quadric::from_parts(a, b, c);
    }
  }
};

inline Eigen::Matrix4d to_eigen(const Mat4& a) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = a.m[i][j];
  return e;
}

// Independent determinant route (Eigen LU) for cross-checking det4 and the
// interpolated pencil coefficients.
inline double eigen_pencil_det(const Quadric& e, const Quadric& q, double lambda) {
  Eigen::Matrix4d m = to_eigen(e.matrix()) * lambda + to_eigen(q.matrix());
  return m.determinant();
}

inline bool close_rel(double a, double b, double rel, double abs = 0.0) {
  return std::fabs(a - b) <= abs + rel * std::max(std::fabs(a), std::fabs(b));
}

// Support-function clearance of an ellipsoid from a plane: the ellipsoid
// {(x-c)^T B (x-c) <= 1} has max n.x = n.c + sqrt(n^T B^-1 n), so the pair
// crosses iff |n.c - d| < sqrt(n^T B^-1 n). Returns that difference:
// negative crossing, zero tangent, positive clear of the plane.
inline double plane_clearance(const Ellipsoid& e, const Plane& pl) {
  const Sym3& b = e.normalized().quadratic();
  double h = std::sqrt(pl.n.dot(solve3(b, pl.n)));
  return std::fabs(pl.n.dot(e.center()) - pl.d) - h;
}

// Exactly tangent plane with normal n touching the ellipsoid on its
// n-positive side (above == true) or n-negative side.
inline Plane tangent_plane(const Ellipsoid& e, const Vec3& n, bool above) {
  const Sym3& b = e.normalized().quadratic();
  double h = std::sqrt(n.dot(solve3(b, n)));
  return Plane::make(n, n.dot(e.center()) + (above ? h : -h));
}

}  // namespace qct
