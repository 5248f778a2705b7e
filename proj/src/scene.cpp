// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/scene.hpp"

#include "qcontact/errors.hpp"
#include "qcontact/invariants.hpp"

namespace qc {

Scene::Scene(std::vector<Plane> planes, std::vector<Zone> zones)
    : planes_(std::move(planes)), zones_(std::move(zones)) {
  for (const Zone& z : zones_) {
    if (z.signs.size() != planes_.size())
      fail(Errc::Parse, "zone sign string length does not match plane count");
    for (char c : z.signs)
      if (c != '+' && c != '-') fail(Errc::Parse, "zone signs must be '+' or '-'");
  }
}

const SmallnessVerdict* Scene::piece_smallness(const Ellipsoid& e, int zone_index,
                                               const Tolerances& tol) const {
  const std::optional<Quadric>& piece = zones_[zone_index].piece;
  if (!piece) return nullptr;
  std::array<double, 3> key{e.alpha(), e.beta(), e.gamma()};
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto& row = small_cache_[key];
  if (row.empty()) row.resize(zones_.size());
  if (!row[zone_index]) {
    try {
      row[zone_index] = is_small(e, *piece, tol);
    } catch (const Error& err) {
      if (err.code() != Errc::UnsupportedClass) throw;
      row[zone_index] = SmallnessVerdict{};  // marker: no smallness notion
      row[zone_index]->cls = classify(*piece, tol);
      row[zone_index]->n_checks = -1;
    }
  }
  if (row[zone_index]->n_checks < 0) return nullptr;
  return &*row[zone_index];
}

ZoneReport detect_zone(const Scene& s, const Ellipsoid& e, const Tolerances& tol) {
  ZoneReport r;
  for (size_t i = 0; i < s.planes().size(); ++i) {
    PlaneReport pr = plane_contact(e, s.planes()[i], tol);
    r.plane_reports.push_back(pr);
    if (pr.transversal || pr.region == Region::Indeterminate) {
      r.signs += '*';
      r.crossed.push_back(static_cast<int>(i));
    } else {
      r.signs += pr.region == Region::RPlus ? '+' : '-';
    }
  }
  r.straddling = !r.crossed.empty();
  if (r.straddling || s.zones().empty()) return r;
  for (size_t z = 0; z < s.zones().size(); ++z)
    if (s.zones()[z].signs == r.signs) {
      r.zone = static_cast<int>(z) + 1;
      return r;
    }
  fail(Errc::NoMatchingZone, "sign vector " + r.signs + " matches no declared zone");
}

namespace {

// A zone is compatible with a straddling sign vector when it agrees on
// every non-crossed plane.
bool compatible(const std::string& zone_signs, const std::string& signs) {
  for (size_t i = 0; i < signs.size(); ++i)
    if (signs[i] != '*' && zone_signs[i] != signs[i]) return false;
  return true;
}

void check_zone(const Scene& s, const Ellipsoid& e, int zone_index,
                bool require_smallness, const Tolerances& tol, SceneReport& out) {
  const Zone& z = s.zones()[zone_index];
  if (!z.piece) return;
  SceneCheck chk;
  chk.zone = zone_index + 1;
  if (classify(*z.piece, tol) == QuadricClass::SinglePlane) {
    chk.is_plane_piece = true;
    chk.plane_report = plane_contact(e, plane_from_quadric(*z.piece, tol), tol);
    out.contact = out.contact || chk.plane_report.transversal;
  } else {
    const SmallnessVerdict* sv = s.piece_smallness(e, zone_index, tol);
    chk.report = is_transversal_contact(e, *z.piece, require_smallness, tol, sv);
    out.contact = out.contact || chk.report.transversal;
  }
  out.checked.push_back(std::move(chk));
}

}  // namespace

SceneReport detect_contact(const Scene& s, const Ellipsoid& e, bool require_smallness,
                           const Tolerances& tol) {
  SceneReport r;
  r.zone = detect_zone(s, e, tol);
  if (!r.zone.straddling) {
    if (r.zone.zone > 0)
      check_zone(s, e, r.zone.zone - 1, require_smallness, tol, r);
    return r;
  }
  for (size_t z = 0; z < s.zones().size(); ++z)
    if (compatible(s.zones()[z].signs, r.zone.signs))
      check_zone(s, e, static_cast<int>(z), require_smallness, tol, r);
  return r;
}

}  // namespace qc
