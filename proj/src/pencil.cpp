// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/pencil.hpp"

#include <algorithm>
#include <cmath>

namespace qc {

double QuarticPoly::max_abs() const {
  return std::max({std::fabs(c4), std::fabs(c3), std::fabs(c2), std::fabs(c1),
                   std::fabs(c0)});
}

namespace {

// Power-of-two factor bringing a matrix scale near 1; exact to divide out.
double prescale(double scale) {
  if (scale <= 1e6) return 1.0;
  int ex;
  std::frexp(scale, &ex);
  return std::ldexp(1.0, -ex);
}

}  // namespace

QuarticPoly char_poly(const Quadric& e, const Quadric& q) {
  Mat4 me = e.matrix();
  Mat4 mq = q.matrix();
  const double se = prescale(me.max_abs());
  const double sq = prescale(mq.max_abs());
  if (se != 1.0)
    for (auto& row : me.m)
      for (double& v : row) v *= se;
  if (sq != 1.0)
    for (auto& row : mq.m)
      for (double& v : row) v *= sq;

  // d[k] = det(l_k E + Q) at l_k = k - 2.
  double d[5];
  for (int k = 0; k < 5; ++k) {
    double l = k - 2;
    Mat4 p;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p.m[i][j] = l * me.m[i][j] + mq.m[i][j];
    d[k] = det4(p);
  }

  // Exact inverse of the Vandermonde system on {-2,-1,0,1,2}.
  QuarticPoly c;
  c.c0 = d[2];
  c.c1 = (8.0 * (d[3] - d[1]) - (d[4] - d[0])) / 12.0;
  c.c2 = (16.0 * (d[3] + d[1]) - (d[4] + d[0]) - 30.0 * d[2]) / 24.0;
  c.c3 = ((d[4] - d[0]) - 2.0 * (d[3] - d[1])) / 12.0;
  c.c4 = ((d[4] + d[0]) - 4.0 * (d[3] + d[1]) + 6.0 * d[2]) / 24.0;

  // Undo the prescale: coefficient k carries se^k * sq^(4-k).
  if (se != 1.0 || sq != 1.0) {
    c.c0 /= sq * sq * sq * sq;
    c.c1 /= se * sq * sq * sq;
    c.c2 /= se * se * sq * sq;
    c.c3 /= se * se * se * sq;
    c.c4 /= se * se * se * se;
  }
  return c;
}

double eval_quartic(const QuarticPoly& p, double lambda) {
  return (((p.c4 * lambda + p.c3) * lambda + p.c2) * lambda + p.c1) * lambda + p.c0;
}

void coeff_floors(const QuarticPoly& p, double sq, double rel, double floors[5]) {
  double stencil = 0;
  for (int k = 0; k < 5; ++k) stencil += std::fabs(p[k]) * (1 << k);
  floors[0] = rel * sq * sq * sq * sq;
  for (int k = 1; k < 5; ++k) floors[k] = rel * stencil;
}

}  // namespace qc
