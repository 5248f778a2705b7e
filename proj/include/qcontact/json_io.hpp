// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "qcontact/classifier.hpp"
#include "qcontact/invariants.hpp"
#include "qcontact/oracle.hpp"
#include "qcontact/scene.hpp"

namespace qc {

// Document formats:
//   quadric: {"a": [a11,a22,a33,a12,a13,a23], "b": [b1,b2,b3], "c": c}
//   plane:   {"n": [n1,n2,n3], "d": d}
//   scene:   {"planes": [plane...],
//             "zones": [{"signs": "-+", "quadric": quadric?}...]}
// Malformed documents raise Parse errors.

Quadric quadric_from_json(const nlohmann::json& j);
Plane plane_from_json(const nlohmann::json& j);
Scene scene_from_json(const nlohmann::json& j);

Quadric load_quadric(const std::string& path);
Plane load_plane(const std::string& path);
Scene load_scene(const std::string& path);

nlohmann::json to_json(const Quadric& q);
nlohmann::json to_json(const Plane& p);
nlohmann::json to_json(const InvariantSet& s);
nlohmann::json to_json(const ReducedForm& r);
nlohmann::json to_json(const QuarticPoly& p);
nlohmann::json to_json(const Discriminants& d);
nlohmann::json to_json(const SmallnessVerdict& v);
nlohmann::json to_json(const PositionReport& p);
nlohmann::json to_json(const ContactReport& r);
nlohmann::json to_json(const PlaneReport& r);
nlohmann::json to_json(const ZoneReport& r);
nlohmann::json to_json(const SceneReport& r);
nlohmann::json to_json(const RootSet& r);
nlohmann::json to_json(const SampleResult& r);

}  // namespace qc
