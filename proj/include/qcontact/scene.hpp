// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcontact/plane.hpp"

namespace qc {

// One region of a plane arrangement: a sign per plane ('+' = the n.x >= d
// side) and at most one quadric piece living there.
struct Zone {
  std::string signs;
  std::optional<Quadric> piece;
};

// Immutable plane arrangement with quadric pieces. Queries are safe to run
// concurrently; the per-shape smallness cache is the only mutable state and
// is lock-protected.
class Scene {
 public:
  // Validates zone sign strings against the plane count.
  Scene(std::vector<Plane> planes, std::vector<Zone> zones);

  const std::vector<Plane>& planes() const { return planes_; }
  const std::vector<Zone>& zones() const { return zones_; }

  // Smallness of an ellipsoid shape against a zone's piece, memoized by the
  // shape's semi-axes (smallness is motion-invariant, so one entry covers
  // every placement of the same shape). Returns nullptr for plane-class
  // pieces, where no smallness notion applies.
  const SmallnessVerdict* piece_smallness(const Ellipsoid& e, int zone_index,
                                          const Tolerances& tol = {}) const;

 private:
  std::vector<Plane> planes_;
  std::vector<Zone> zones_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::array<double, 3>,
                   std::vector<std::optional<SmallnessVerdict>>>
      small_cache_;
};

// Zone location of an ellipsoid: per-plane region characters, '*' where the
// ellipsoid crosses the plane. `zone` is the 1-based id of the matched zone,
// 0 when straddling or when the scene declares no zones. Throws
// NoMatchingZone when a clean sign vector matches none of the declared
// zones.
struct ZoneReport {
  std::string signs;
  bool straddling = false;
  std::vector<int> crossed;  // indices of crossed planes
  int zone = 0;
  std::vector<PlaneReport> plane_reports;
};

ZoneReport detect_zone(const Scene& s, const Ellipsoid& e, const Tolerances& tol = {});

// Contact between an ellipsoid and the scene's pieces. Lazy: only the zone
// the ellipsoid sits in is checked; when straddling, exactly the zones
// compatible with the non-crossed plane signs are. `checked` records which
// pieces were actually evaluated. Plane-class pieces go through the plane
// criterion (no smallness needed); others through the discriminant
// classifier, with smallness verdicts served from the scene cache.
struct SceneCheck {
  int zone;  // 1-based
  bool is_plane_piece = false;
  ContactReport report;      // valid when !is_plane_piece
  PlaneReport plane_report;  // valid when is_plane_piece
};

struct SceneReport {
  ZoneReport zone;
  bool contact = false;
  std::vector<SceneCheck> checked;
};

SceneReport detect_contact(const Scene& s, const Ellipsoid& e,
                           bool require_smallness = true, const Tolerances& tol = {});

}  // namespace qc
