// Copyright (c) the qcontact contributors.
// SPDX-License-Identifier: Apache-2.0

#include "qcontact/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcontact/classifier.hpp"
#include "qcontact/errors.hpp"
#include "qcontact/json_io.hpp"
#include "qcontact/oracle.hpp"
#include "qcontact/scene.hpp"

namespace qc {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

json tol_json(const Tolerances& t) {
  return {{"eps_rel", t.eps_rel},
          {"disc_rel", t.disc_rel},
          {"coeff_rel", t.coeff_rel},
          {"small_slack", t.small_slack},
          {"cluster", t.cluster}};
}

// Every report echoes the tolerances it was computed with.
void emit(std::ostream& out, json j, const Tolerances& t, const std::string& format,
          const std::string& text) {
  if (format == "json") {
    j["tolerances"] = tol_json(t);
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::string smallness_text(const SmallnessVerdict& v) {
  std::ostringstream os;
  os << "class: " << to_string(v.cls) << "\n";
  for (int i = 0; i < v.n_checks; ++i) {
    const SmallnessCheck& c = v.checks[i];
    os << "  " << c.name << ": " << fmt(c.left) << (c.relation == '>' ? " >= " : " <= ")
       << fmt(c.right) << (c.passed ? "  ok" : "  FAIL") << "\n";
  }
  os << "small: " << (v.small ? "yes" : "no") << "\n";
  return os.str();
}

std::string poly_text(const QuarticPoly& p) {
  std::ostringstream os;
  os << "c4..c0: " << fmt(p.c4) << " " << fmt(p.c3) << " " << fmt(p.c2) << " "
     << fmt(p.c1) << " " << fmt(p.c0) << "\n";
  return os.str();
}

std::string contact_text(const ContactReport& r) {
  std::ostringstream os;
  os << poly_text(r.poly);
  os << "d4: " << fmt(r.disc.d4) << "  d3: " << fmt(r.disc.d3) << "\n";
  os << "transversal: " << (r.transversal ? "yes" : "no")
     << (r.conclusive ? "" : "  (inconclusive)") << "\n";
  if (r.tangency_possible) os << "tangency possible (d4 = 0, d3 >= 0)\n";
  if (r.smallness_known) os << smallness_text(r.smallness);
  if (r.position_known) {
    os << "region: " << to_string(r.position.region) << "  signs: " << r.position.signs
       << "  changes: " << r.position.changes << "\n";
    if (!r.position.mismatch.empty()) os << "note: " << r.position.mismatch << "\n";
  }
  return os.str();
}

struct Paths {
  std::string e, q, p, scene;
};

int cmd_classify(std::ostream& out, const Paths& in, const Tolerances& tol,
                 const std::string& format) {
  Quadric q = load_quadric(in.q);
  QuadricClass cls = classify(q, tol);
  json j{{"class", to_string(cls)}, {"invariants", to_json(invariant_set(q))}};
  std::ostringstream os;
  os << "class: " << to_string(cls) << "\n";
  try {
    ReducedForm rf = reduced_form(q, tol);
    j["reduced_form"] = to_json(rf);
    os << "sign: " << rf.sign << "  axes: " << fmt(rf.ax[0]) << " " << fmt(rf.ax[1])
       << " " << fmt(rf.ax[2]) << "  d: " << fmt(rf.d) << "\n";
  } catch (const Error&) {
    // Classes without a reduced form (cones, plane pairs, ...) still classify.
  }
  emit(out, j, tol, format, os.str());
  return 0;
}

int cmd_invariants(std::ostream& out, const Paths& in, const Tolerances& tol,
                   const std::string& format) {
  Quadric q = load_quadric(in.q);
  InvariantSet s = invariant_set(q);
  json j = to_json(s);
  j["class"] = to_string(classify(q, tol));
  std::ostringstream os;
  os << "detQ: " << fmt(s.detQ) << "\nmu: " << fmt(s.mu[0]) << " " << fmt(s.mu[1])
     << " " << fmt(s.mu[2]) << "\nJ: " << fmt(s.J) << "  K: " << fmt(s.K)
     << "  J': " << fmt(s.Jp) << "\nclass: " << j["class"].get<std::string>() << "\n";
  emit(out, j, tol, format, os.str());
  return 0;
}

int cmd_smallness(std::ostream& out, const Paths& in, const Tolerances& tol,
                  const std::string& format) {
  Ellipsoid e = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Quadric q = load_quadric(in.q);
  SmallnessVerdict v = is_small(e, q, tol);
  emit(out, to_json(v), tol, format, smallness_text(v));
  return 0;
}

int cmd_charpoly(std::ostream& out, const Paths& in, const Tolerances& tol,
                 const std::string& format) {
  Ellipsoid e = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Quadric q = load_quadric(in.q);
  QuarticPoly p = char_poly(e.normalized(), q);
  Discriminants d = discriminants(p, tol);
  json j{{"poly", to_json(p)}, {"discriminants", to_json(d)}};
  std::ostringstream os;
  os << poly_text(p) << "d4: " << fmt(d.d4) << "  d3: " << fmt(d.d3) << "\n";
  emit(out, j, tol, format, os.str());
  return 0;
}

json oracle_json(const Ellipsoid& e, const Quadric& q, const ContactReport& r, int grid,
                 const Tolerances& tol, bool* agree_out) {
  RootSet roots = pencil_roots(e, q, tol);
  SampleResult sm = sample_intersection(e, q, grid);
  bool mixed = sm.verdict == SampleVerdict::MixedSign;
  // Crossing holds iff the pencil has a non-real root; grid evidence can
  // only confirm crossing, never separation.
  bool agree = (r.transversal == roots.has_nonreal) && (!mixed || r.transversal);
  if (agree_out) *agree_out = agree;
  return json{{"roots", to_json(roots)},
              {"sampling", to_json(sm)},
              {"classifier_transversal", r.transversal},
              {"agree", agree}};
}

int cmd_contact(std::ostream& out, const Paths& in, bool require_small, bool verify,
                int grid, const Tolerances& tol, const std::string& format) {
  Ellipsoid e = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Quadric q = load_quadric(in.q);
  ContactReport r = is_transversal_contact(e, q, require_small, tol);
  json j = to_json(r);
  std::ostringstream os;
  os << contact_text(r);
  if (verify) {
    bool agree = true;
    j["oracle"] = oracle_json(e, q, r, grid, tol, &agree);
    os << "oracle agreement: " << (agree ? "yes" : "NO") << "\n";
  }
  emit(out, j, tol, format, os.str());
  return r.transversal ? 10 : 0;
}

int cmd_position(std::ostream& out, const Paths& in, const Tolerances& tol,
                 const std::string& format) {
  Ellipsoid e = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Quadric q = load_quadric(in.q);
  ContactReport r = is_transversal_contact(e, q, true, tol);
  json j{{"transversal", r.transversal}, {"region", to_string(r.region)}};
  std::ostringstream os;
  os << "region: " << to_string(r.region) << "\n";
  if (r.position_known) {
    j["position"] = to_json(r.position);
    os << "signs: " << r.position.signs << "  changes: " << r.position.changes
       << "  orientation: " << r.position.orientation << "\n";
    if (!r.position.mismatch.empty()) os << "note: " << r.position.mismatch << "\n";
  }
  emit(out, j, tol, format, os.str());
  return r.transversal ? 10 : 0;
}

int cmd_plane(std::ostream& out, const Paths& in, const Tolerances& tol,
              const std::string& format) {
  Ellipsoid e = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Plane p = load_plane(in.p);
  PlaneReport r = plane_contact(e, p, tol);
  std::ostringstream os;
  os << poly_text(r.poly) << "d3: " << fmt(r.d3) << "\ntransversal: "
     << (r.transversal ? "yes" : "no") << "  region: " << to_string(r.region) << "\n";
  emit(out, to_json(r), tol, format, os.str());
  return r.transversal ? 10 : 0;
}

int cmd_scene(std::ostream& out, const Paths& in, bool require_small,
              const Tolerances& tol, const std::string& format) {
  Ellipsoid e = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Scene s = load_scene(in.scene);
  SceneReport r = detect_contact(s, e, require_small, tol);
  std::ostringstream os;
  os << "zone: " << r.zone.zone << "  signs: " << r.zone.signs
     << (r.zone.straddling ? "  (straddling)" : "") << "\n";
  for (const SceneCheck& c : r.checked) {
    os << "  piece in zone " << c.zone << ": ";
    if (c.is_plane_piece)
      os << (c.plane_report.transversal ? "contact" : "no contact") << "\n";
    else
      os << (c.report.transversal ? "contact"
                                  : c.report.conclusive ? "no contact"
                                                        : "no contact (inconclusive)")
         << "\n";
  }
  os << "contact: " << (r.contact ? "yes" : "no") << "\n";
  emit(out, to_json(r), tol, format, os.str());
  return r.contact ? 10 : 0;
}

int cmd_oracle(std::ostream& out, const Paths& in, int grid, const Tolerances& tol,
               const std::string& format) {
  Ellipsoid e = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Quadric q = load_quadric(in.q);
  ContactReport r = is_transversal_contact(e, q, false, tol);
  bool agree = true;
  json j = oracle_json(e, q, r, grid, tol, &agree);
  RootSet roots = pencil_roots(e, q, tol);
  std::ostringstream os;
  os << poly_text(r.poly);
  os << "roots:";
  for (int i = 0; i < roots.count; ++i) {
    os << " " << fmt(roots.roots[i].real());
    if (roots.roots[i].imag() != 0) os << (roots.roots[i].imag() > 0 ? "+" : "") << fmt(roots.roots[i].imag()) << "i";
  }
  os << "  (" << roots.structural_zeros << " structural zeros)\n";
  os << "non-real roots: " << (roots.has_nonreal ? "yes" : "no") << "\n";
  SampleResult sm = sample_intersection(e, q, grid);
  os << "grid " << grid << ": min " << fmt(sm.min) << "  max " << fmt(sm.max) << "  "
     << (sm.verdict == SampleVerdict::MixedSign ? "mixed-sign" : "separated-sign") << "\n";
  os << "classifier transversal: " << (r.transversal ? "yes" : "no") << "\n";
  os << "agree: " << (agree ? "yes" : "NO") << "\n";
  emit(out, j, tol, format, os.str());
  return 0;
}

struct SweepRow {
  int step;
  Vec3 c;
  QuarticPoly p;
  Discriminants d;
  bool transversal;
  Region region;
};

int cmd_sweep(std::ostream& out, std::ostream& err, const Paths& in,
              const std::vector<double>& from, const std::vector<double>& to, int steps,
              bool require_small, const Tolerances& tol, const std::string& format) {
  Ellipsoid e0 = Ellipsoid::from_quadric(load_quadric(in.e), tol);
  Quadric q = load_quadric(in.q);

  // Smallness depends only on the shapes, not the placement: check once.
  const SmallnessVerdict* known = nullptr;
  SmallnessVerdict small;
  bool have_small = true;
  try {
    small = is_small(e0, q, tol);
    known = &small;
  } catch (const Error&) {
    have_small = false;
  }
  if (require_small) {
    if (!have_small)
      fail(Errc::UnsupportedClass, "no smallness condition for this class; use --no-smallness");
    if (!small.small) fail(Errc::SmallnessViolated, "smallness condition fails for this pair");
  }

  Vec3 a{from[0], from[1], from[2]}, b{to[0], to[1], to[2]};
  std::vector<SweepRow> rows(steps);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < steps; ++i) {
    double t = steps > 1 ? double(i) / (steps - 1) : 0.0;
    Vec3 target = a + (b - a) * t;
    Ellipsoid e = e0.moved(RigidMotion::translate(target - e0.center()));
    ContactReport r = is_transversal_contact(e, q, false, tol, known);
    rows[i] = {i, target, r.poly, r.disc, r.transversal, r.region};
  }

  bool any_contact = false;
  if (format == "json") {
    json arr = json::array();
    for (const SweepRow& r : rows) {
      arr.push_back(json{{"step", r.step},
                         {"center", {r.c.x, r.c.y, r.c.z}},
                         {"poly", to_json(r.p)},
                         {"d3", r.d.d3},
                         {"d4", r.d.d4},
                         {"verdict", r.transversal ? "contact" : "none"},
                         {"region", to_string(r.region)}});
      any_contact = any_contact || r.transversal;
    }
    out << json{{"rows", arr}, {"tolerances", tol_json(tol)}}.dump(2) << "\n";
  } else {
    out << "step,cx,cy,cz,c4,c3,c2,c1,c0,d3,d4,verdict,region\n";
    for (const SweepRow& r : rows) {
      out << r.step << "," << fmt(r.c.x) << "," << fmt(r.c.y) << "," << fmt(r.c.z) << ","
          << fmt(r.p.c4) << "," << fmt(r.p.c3) << "," << fmt(r.p.c2) << "," << fmt(r.p.c1)
          << "," << fmt(r.p.c0) << "," << fmt(r.d.d3) << "," << fmt(r.d.d4) << ","
          << (r.transversal ? "contact" : "none") << "," << to_string(r.region) << "\n";
      any_contact = any_contact || r.transversal;
    }
  }
  if (!have_small && !require_small)
    err << "note: no smallness condition applies; negative rows are inconclusive\n";
  return any_contact ? 10 : 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contact and relative position of an ellipsoid against quadric surfaces"};
  app.require_subcommand(1);

  Tolerances tol;
  if (const char* env = std::getenv("QCONTACT_EPS_REL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) {
      err << "error: QCONTACT_EPS_REL must be a positive number, got '" << env << "'\n";
      return 2;
    }
    tol.eps_rel = v;
  }
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--eps-rel", tol.eps_rel, "Relative tolerance for banded signs")
      ->check(CLI::PositiveNumber);
  app.add_option("--disc-rel", tol.disc_rel, "Relative tolerance for discriminant signs")
      ->check(CLI::PositiveNumber);
  app.add_option("--coeff-rel", tol.coeff_rel, "Relative tolerance for coefficient signs")
      ->check(CLI::PositiveNumber);
  app.add_option("--small-slack", tol.small_slack, "Slack for smallness comparisons")
      ->check(CLI::PositiveNumber);

  Paths in;
  bool no_small = false, verify = false;
  int grid = 512, steps = 11;
  std::vector<double> from, to;

  auto add_e = [&](CLI::App* c) {
    c->add_option("--e,--ellipsoid", in.e, "Ellipsoid quadric JSON file")->required();
  };
  auto add_q = [&](CLI::App* c) {
    c->add_option("--q,--quadric", in.q, "Quadric JSON file")->required();
  };

  CLI::App* c_classify = app.add_subcommand("classify", "Classify a quadric");
  add_q(c_classify);
  CLI::App* c_inv = app.add_subcommand("invariants", "Euclidean invariants of a quadric");
  add_q(c_inv);
  CLI::App* c_small = app.add_subcommand("smallness", "Smallness condition check");
  add_e(c_small);
  add_q(c_small);
  CLI::App* c_poly = app.add_subcommand("charpoly", "Pencil characteristic polynomial");
  add_e(c_poly);
  add_q(c_poly);
  CLI::App* c_contact = app.add_subcommand("contact", "Transversal contact query");
  add_e(c_contact);
  add_q(c_contact);
  c_contact->add_flag("--no-smallness", no_small, "Answer even when smallness fails");
  c_contact->add_flag("--verify", verify, "Cross-check with root and sampling oracles");
  c_contact->add_option("--grid", grid, "Sampling grid resolution")
      ->check(CLI::Range(64, 1 << 14));
  CLI::App* c_pos = app.add_subcommand("position", "Relative position query");
  add_e(c_pos);
  add_q(c_pos);
  CLI::App* c_plane = app.add_subcommand("plane", "Contact against a plane");
  add_e(c_plane);
  c_plane->add_option("--p,--plane", in.p, "Plane JSON file")->required();
  CLI::App* c_scene = app.add_subcommand("scene", "Contact against a plane-gated scene");
  add_e(c_scene);
  c_scene->add_option("--scene", in.scene, "Scene JSON file")->required();
  c_scene->add_flag("--no-smallness", no_small, "Answer even when smallness fails");
  CLI::App* c_oracle = app.add_subcommand("oracle", "Diagnostic root and sampling oracles");
  add_e(c_oracle);
  add_q(c_oracle);
  c_oracle->add_option("--grid", grid, "Sampling grid resolution")
      ->check(CLI::Range(64, 1 << 14));
  CLI::App* c_sweep = app.add_subcommand("sweep", "Move the ellipsoid along a segment");
  add_e(c_sweep);
  add_q(c_sweep);
  c_sweep->add_option("--from", from, "Start center (x y z)")->expected(3)->required();
  c_sweep->add_option("--to", to, "End center (x y z)")->expected(3)->required();
  c_sweep->add_option("--steps", steps, "Number of steps")->check(CLI::Range(1, 1000000));
  c_sweep->add_flag("--no-smallness", no_small, "Sweep even when smallness fails");

  // Let --format / tolerance flags appear after the subcommand name too.
  for (CLI::App* s : {c_classify, c_inv, c_small, c_poly, c_contact, c_pos, c_plane,
                      c_scene, c_oracle, c_sweep})
    s->fallthrough();

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_classify)) return cmd_classify(out, in, tol, format);
    if (app.got_subcommand(c_inv)) return cmd_invariants(out, in, tol, format);
    if (app.got_subcommand(c_small)) return cmd_smallness(out, in, tol, format);
    if (app.got_subcommand(c_poly)) return cmd_charpoly(out, in, tol, format);
    if (app.got_subcommand(c_contact))
      return cmd_contact(out, in, !no_small, verify, grid, tol, format);
    if (app.got_subcommand(c_pos)) return cmd_position(out, in, tol, format);
    if (app.got_subcommand(c_plane)) return cmd_plane(out, in, tol, format);
    if (app.got_subcommand(c_scene)) return cmd_scene(out, in, !no_small, tol, format);
    if (app.got_subcommand(c_oracle)) return cmd_oracle(out, in, grid, tol, format);
    if (app.got_subcommand(c_sweep))
      // CSV unless JSON was asked for explicitly; sweeps exist to be plotted.
      return cmd_sweep(out, err, in, from, to, steps, !no_small, tol,
                       app.count("--format") && format == "json" ? "json" : "csv");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::SmallnessViolated ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace qc
