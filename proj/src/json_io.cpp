// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/json_io.hpp"

#include <fstream>

#include "qcontact/errors.hpp"

namespace qc {

using nlohmann::json;

namespace {

double num(const json& j, const char* what) {
  if (!j.is_number()) fail(Errc::Parse, std::string(what) + " must be a number");
  return j.get<double>();
}

void expect_array(const json& j, size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    fail(Errc::Parse, std::string(what) + " must be an array of " + std::to_string(n));
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::Parse, path + ": " + e.what());
  }
}

const char* verdict_str(SampleVerdict v) {
  return v == SampleVerdict::MixedSign ? "mixed-sign" : "separated-sign";
}

}  // namespace

Quadric quadric_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("c"))
    fail(Errc::Parse, "quadric needs fields a, b, c");
  expect_array(j["a"], 6, "quadric field a");
  expect_array(j["b"], 3, "quadric field b");
  double a[6], b[3];
  for (int i = 0; i < 6; ++i) a[i] = num(j["a"][i], "quadric field a");
  for (int i = 0; i < 3; ++i) b[i] = num(j["b"][i], "quadric field b");
  return Quadric::from_coefficients(a[0], a[1], a[2], a[3], a[4], a[5], b[0], b[1],
                                    b[2], num(j["c"], "quadric field c"));
}

Plane plane_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d"))
    fail(Errc::Parse, "plane needs fields n, d");
  expect_array(j["n"], 3, "plane field n");
  Vec3 n{num(j["n"][0], "plane field n"), num(j["n"][1], "plane field n"),
         num(j["n"][2], "plane field n")};
  return Plane::make(n, num(j["d"], "plane field d"));
}

Scene scene_from_json(const json& j) {
  if (!j.is_object() || !j.contains("planes"))
    fail(Errc::Parse, "scene needs a planes array");
  if (!j["planes"].is_array()) fail(Errc::Parse, "scene planes must be an array");
  std::vector<Plane> planes;
  for (const auto& p : j["planes"]) planes.push_back(plane_from_json(p));
  std::vector<Zone> zones;
  if (j.contains("zones")) {
    if (!j["zones"].is_array()) fail(Errc::Parse, "scene zones must be an array");
    for (const auto& z : j["zones"]) {
      if (!z.is_object() || !z.contains("signs") || !z["signs"].is_string())
        fail(Errc::Parse, "zone needs a signs string");
      Zone zone;
      zone.signs = z["signs"].get<std::string>();
      if (z.contains("quadric") && !z["quadric"].is_null())
        zone.piece = quadric_from_json(z["quadric"]);
      zones.push_back(std::move(zone));
    }
  }
  return Scene(std::move(planes), std::move(zones));
}

Quadric load_quadric(const std::string& path) { return quadric_from_json(load_file(path)); }
Plane load_plane(const std::string& path) { return plane_from_json(load_file(path)); }
Scene load_scene(const std::string& path) { return scene_from_json(load_file(path)); }

json to_json(const Quadric& q) {
  const Sym3& a = q.quadratic();
  return json{{"a", {a.a11, a.a22, a.a33, a.a12, a.a13, a.a23}},
              {"b", {q.linear().x, q.linear().y, q.linear().z}},
              {"c", q.constant()}};
}

json to_json(const Plane& p) {
  return json{{"n", {p.n.x, p.n.y, p.n.z}}, {"d", p.d}};
}

json to_json(const InvariantSet& s) {
  return json{{"detQ", s.detQ},     {"mu", {s.mu[0], s.mu[1], s.mu[2]}},
              {"trQ00", s.trQ00},   {"detQ00", s.detQ00},
              {"J", s.J},           {"K", s.K},
              {"Jprime", s.Jp}};
}

json to_json(const ReducedForm& r) {
  json j{{"class", to_string(r.cls)},
         {"orientation", r.sign},
         {"ax", {r.ax[0], r.ax[1], r.ax[2]}}};
  if (r.d != 0) j["d"] = r.d;
  if (r.L != 0) j["L"] = r.L;
  if (r.M != 0) j["M"] = r.M;
  return j;
}

json to_json(const QuarticPoly& p) {
  return json{{"c4", p.c4}, {"c3", p.c3}, {"c2", p.c2}, {"c1", p.c1}, {"c0", p.c0}};
}

json to_json(const Discriminants& d) {
  return json{{"d3", d.d3},
              {"d4", d.d4},
              {"s3", std::string(1, sign_char(d.s3))},
              {"s4", std::string(1, sign_char(d.s4))}};
}

json to_json(const SmallnessVerdict& v) {
  json checks = json::array();
  for (int i = 0; i < v.n_checks; ++i) {
    const SmallnessCheck& c = v.checks[i];
    checks.push_back(json{{"name", c.name},
                          {"relation", std::string(1, c.relation)},
                          {"left", c.left},
                          {"right", c.right},
                          {"passed", c.passed}});
  }
  return json{{"small", v.small}, {"class", to_string(v.cls)}, {"checks", checks}};
}

json to_json(const PositionReport& p) {
  json j{{"region", to_string(p.region)},
         {"signs", p.signs},
         {"orientation", p.orientation},
         {"sign_changes", p.changes},
         {"structural_zeros", p.structural_zeros}};
  if (!p.mismatch.empty()) j["mismatch"] = p.mismatch;
  return j;
}

json to_json(const ContactReport& r) {
  json j{{"transversal", r.transversal},
         {"conclusive", r.conclusive},
         {"region", to_string(r.region)},
         {"tangency_possible", r.tangency_possible},
         {"poly", to_json(r.poly)},
         {"discriminants", to_json(r.disc)}};
  if (r.smallness_known) j["smallness"] = to_json(r.smallness);
  if (r.position_known) j["position"] = to_json(r.position);
  return j;
}

json to_json(const PlaneReport& r) {
  return json{{"transversal", r.transversal},
              {"region", to_string(r.region)},
              {"poly", to_json(r.poly)},
              {"d3", r.d3},
              {"s3", std::string(1, sign_char(r.s3))},
              {"c3_sign", std::string(1, sign_char(r.sc3))}};
}

json to_json(const ZoneReport& r) {
  json planes = json::array();
  for (const auto& pr : r.plane_reports) planes.push_back(to_json(pr));
  return json{{"signs", r.signs},
              {"straddling", r.straddling},
              {"crossed", r.crossed},
              {"zone", r.zone},
              {"planes", planes}};
}

json to_json(const SceneReport& r) {
  json checked = json::array();
  for (const auto& c : r.checked) {
    json item{{"zone", c.zone}};
    if (c.is_plane_piece)
      item["plane_report"] = to_json(c.plane_report);
    else
      item["report"] = to_json(c.report);
    checked.push_back(item);
  }
  return json{{"zone", to_json(r.zone)}, {"contact", r.contact}, {"checked", checked}};
}

json to_json(const RootSet& r) {
  json roots = json::array();
  for (int i = 0; i < r.count; ++i)
    roots.push_back(json{{"re", r.roots[i].real()}, {"im", r.roots[i].imag()}});
  return json{{"roots", roots},
              {"structural_zeros", r.structural_zeros},
              {"n_real", r.n_real},
              {"has_nonreal", r.has_nonreal}};
}

json to_json(const SampleResult& r) {
  return json{{"verdict", verdict_str(r.verdict)},
              {"min", r.min},
              {"max", r.max},
              {"grid", r.grid}};
}

}  // namespace qc
