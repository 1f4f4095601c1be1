// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: translation curves, distances, simple ratios,
// Ceva/Menelaus configurations and suites, surface meshes (OBJ + CSV) and
// figure polylines (CSV). All structured output is JSON with a versioned
// schema tag; identical inputs produce byte-identical output.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttri/constcurv.hpp"
#include "ttri/harness.hpp"
#include "ttri/nil.hpp"
#include "ttri/slr.hpp"
#include "ttri/sol.hpp"
#include "ttri/surface.hpp"

using json = nlohmann::ordered_json;
using namespace ttri;

namespace {

constexpr const char* kSchema = "thurston-tri/1";

Geometry parse_geometry(const std::string& s) {
  if (s == "nil") return Geometry::Nil;
  if (s == "sol") return Geometry::Sol;
  if (s == "slr") return Geometry::Slr;
  if (s == "e3") return Geometry::E3;
  if (s == "s3") return Geometry::S3;
  if (s == "h3") return Geometry::H3;
  throw CLI::ValidationError("--geometry", "unknown geometry '" + s + "'");
}

std::vector<ModelPoint> parse_points(const std::string& s) {
  std::vector<ModelPoint> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ';')) {
    for (char& c : cur)
      if (c == '(' || c == ')' || c == ',') c = ' ';
    std::stringstream ps(cur);
    ModelPoint p;
    if (!(ps >> p.x >> p.y >> p.z))
      throw CLI::ValidationError("points", "expected '(x,y,z)' got '" + cur + "'");
    out.push_back(p);
  }
  return out;
}

json to_json(const ModelPoint& p) { return json::array({p.x, p.y, p.z}); }

json to_json(const SignedRatio& r) {
  return json{{"value", r.value},
              {"between", r.between},
              {"geometry", geometry_name(r.geometry)}};
}

json to_json(const TheoremReport& r) {
  json j{{"geometry", geometry_name(r.geometry)},
         {"kind", config_kind_name(r.kind)},
         {"ratios", json::array({to_json(r.ratios[0]), to_json(r.ratios[1]),
                                 to_json(r.ratios[2])})},
         {"product", r.product},
         {"deviation", r.deviation}};
  if (r.has_alt) {
    j["alt_ratios"] = json::array(
        {to_json(r.alt_ratios[0]), to_json(r.alt_ratios[1]), to_json(r.alt_ratios[2])});
    j["alt_product"] = r.alt_product;
    j["alt_deviation"] = r.alt_deviation;
  }
  j["trace"] = r.trace;
  return j;
}

void emit(const json& j, const std::string& output) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + output);
    f << text;
  }
}

// Triangle from a vertex list; two points imply A0 at the origin.
TriangleSpec make_triangle(Geometry g, const std::vector<ModelPoint>& pts) {
  TriangleSpec tri;
  tri.geometry = g;
  if (pts.size() == 2) {
    tri.vertices = {ModelPoint{}, pts[0], pts[1]};
  } else if (pts.size() == 3) {
    tri.vertices = {pts[0], pts[1], pts[2]};
  } else {
    throw CLI::ValidationError("--vertices", "expected 2 or 3 points");
  }
  return tri;
}

// Sample the side translation curve a -> b (segment for SL2R~).
std::vector<ModelPoint> side_samples(Geometry g, const ModelPoint& a,
                                     const ModelPoint& b, int n) {
  std::vector<ModelPoint> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    double mu = static_cast<double>(i) / n;
    switch (g) {
      case Geometry::Nil: {
        NilCurveSolution s = nil_solve(nil_translate(b, nil_inverse_translation(a)));
        out.push_back(nil_translate(nil_curve(s.dir, mu * s.t), a));
        break;
      }
      case Geometry::Sol: {
        SolCurveSolution s = sol_solve(sol_translate(b, sol_group_inverse(a)));
        out.push_back(sol_translate(sol_curve(s.dir, mu * s.t), a));
        break;
      }
      default:
        out.push_back(a + mu * (b - a));
    }
  }
  return out;
}

void write_csv_polyline(const std::string& path, const std::vector<ModelPoint>& pts) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << "x,y,z\n";
  char buf[128];
  for (const ModelPoint& p : pts) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.x, p.y, p.z);
    f << buf;
  }
}

int run_curve(Geometry g, const std::string& target_str,
              const std::vector<double>& dir, double t, const std::string& output) {
  json j{{"schema", kSchema}, {"command", "curve"}, {"geometry", geometry_name(g)}};
  if (!target_str.empty()) {
    ModelPoint target = parse_points(target_str).at(0);
    switch (g) {
      case Geometry::Nil: {
        NilCurveSolution s = nil_solve(target);
        j["phi"] = s.dir.phi;
        j["theta"] = s.dir.theta;
        j["t"] = s.t;
        j["residual"] = distance_euclid(nil_curve(s.dir, s.t), target);
        break;
      }
      case Geometry::Sol: {
        SolCurveSolution s = sol_solve(target);
        j["phi"] = s.dir.phi;
        j["theta"] = s.dir.theta;
        j["t"] = s.t;
        j["residual"] = distance_euclid(sol_curve(s.dir, s.t), target);
        break;
      }
      case Geometry::Slr: {
        SlrCurveSolution s = slr_solve(target);
        j["lambda"] = s.dir.lambda;
        j["alpha"] = s.dir.alpha;
        j["regime"] = s.dir.regime == SlrRegime::H2Like     ? "h2-like"
                      : s.dir.regime == SlrRegime::LightLike ? "light-like"
                                                             : "fibre-like";
        j["s"] = s.s;
        j["residual"] = distance_euclid(slr_curve(s.dir, s.s), target);
        break;
      }
      default:
        throw CLI::ValidationError("--geometry", "curve needs nil, sol or slr");
    }
  } else {
    if (dir.size() != 2)
      throw CLI::ValidationError("--direction", "expected two angles");
    ModelPoint p;
    switch (g) {
      case Geometry::Nil: p = nil_curve({dir[0], dir[1]}, t); break;
      case Geometry::Sol: p = sol_curve({dir[0], dir[1]}, t); break;
      case Geometry::Slr: {
        SlrDirection d;
        d.lambda = dir[0];
        d.alpha = dir[1];
        double c2 = std::cos(2.0 * d.alpha);
        d.regime = std::abs(c2) < 1e-13 ? SlrRegime::LightLike
                   : c2 > 0.0           ? SlrRegime::H2Like
                                        : SlrRegime::FibreLike;
        p = slr_curve(d, t);
        break;
      }
      default:
        throw CLI::ValidationError("--geometry", "curve needs nil, sol or slr");
    }
    j["t"] = t;
    j["point"] = to_json(p);
  }
  emit(j, output);
  return 0;
}

int run_suite(const std::string& geom, int trials, uint64_t seed,
              const std::string& output) {
  json j{{"schema", kSchema}, {"command", "suite"}, {"geometry", geom},
         {"trials", trials}, {"seed", seed}};
  Tolerances tol;
  bool failed = false;
  if (geom == "e3" || geom == "s3" || geom == "h3") {
    CCKind kind = geom == "e3"   ? CCKind::Euclidean
                  : geom == "s3" ? CCKind::Spherical
                                 : CCKind::Hyperbolic;
    std::vector<TheoremReport> reports = cc_verify_ceva_menelaus(kind, seed, trials);
    double max_c = 0, max_m = 0;
    int failures = 0;
    for (const TheoremReport& r : reports) {
      (r.kind == ConfigKind::Ceva ? max_c : max_m) =
          std::max(r.kind == ConfigKind::Ceva ? max_c : max_m, r.deviation);
      if (r.deviation > tol.eps_theorem) ++failures;
    }
    j["max_ceva_deviation"] = max_c;
    j["max_menelaus_deviation"] = max_m;
    j["failures"] = failures;
    failed = failures > 0;
  } else {
    SuiteSummary s = random_suite(parse_geometry(geom), trials, seed, tol);
    j["resampled"] = s.resampled;
    j["max_ceva_deviation"] = s.max_ceva_deviation;
    j["mean_ceva_deviation"] = s.mean_ceva_deviation;
    j["max_menelaus_deviation"] = s.max_menelaus_deviation;
    j["mean_menelaus_deviation"] = s.mean_menelaus_deviation;
    j["failures"] = s.failures;
    failed = s.failures > 0;
    if (s.has_alt) {
      j["alt_max_ceva_deviation"] = s.alt_max_ceva_deviation;
      j["alt_max_menelaus_deviation"] = s.alt_max_menelaus_deviation;
      j["alt_failures"] = s.alt_failures;
      j["alt_verdict"] =
          s.alt_failures == 0
              ? "arc-length-weighted ratios satisfy the theorems"
              : "arc-length-weighted ratios violate the theorems; the "
                "Euclidean ratio route is the consistent one";
    }
  }
  emit(j, output);
  return failed ? 2 : 0;
}

int run_surface(Geometry g, const std::string& verts, int resolution,
                const std::string& output) {
  TriangleSpec tri = make_triangle(g, parse_points(verts));
  Mesh mesh = surface_mesh(tri, resolution);
  std::string base = output.empty() ? std::string("surface") : output;

  std::ofstream obj(base + ".obj", std::ios::binary);
  if (!obj) throw std::runtime_error("cannot open output file " + base + ".obj");
  char buf[160];
  for (const ModelPoint& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    obj << buf;
  }
  for (const std::array<int, 3>& f : mesh.triangles)
    obj << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";

  std::ofstream csv(base + ".csv", std::ios::binary);
  if (!csv) throw std::runtime_error("cannot open output file " + base + ".csv");
  csv << "x,y,z,residual\n";
  double max_res = 0.0;
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    const ModelPoint& v = mesh.vertices[i];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", v.x, v.y, v.z,
                  mesh.residuals[i]);
    csv << buf;
    max_res = std::max(max_res, std::abs(mesh.residuals[i]));
  }

  json j{{"schema", kSchema},
         {"command", "surface"},
         {"geometry", geometry_name(g)},
         {"vertices", mesh.vertices.size()},
         {"triangles", mesh.triangles.size()},
         {"coverage", mesh.coverage},
         {"skipped", mesh.skipped},
         {"multi_root_nodes", mesh.multi_root_nodes},
         {"max_residual", max_res},
         {"obj", base + ".obj"},
         {"csv", base + ".csv"}};
  emit(j, "");
  return max_res > 1e-6 ? 2 : 0;
}

int run_figures(const std::string& outdir, int n) {
  auto path = [&](const std::string& name) { return outdir + "/" + name; };
  struct FigTriangle {
    std::string tag;
    Geometry g;
    std::array<ModelPoint, 3> v;
  };
  const std::vector<FigTriangle> tris{
      {"fig1_nil", Geometry::Nil, {{{0, 0, 0}, {-1, 1, 1}, {0.5, 1, 0.5}}}},
      {"fig2_nil_fibre_type", Geometry::Nil, {{{0, 0, 0}, {2, 0, 3}, {-1, 0, 2}}}},
      {"fig4_sol", Geometry::Sol, {{{0, 0, 0}, {1.25, 0.5, 1}, {0.2, 1, 0.5}}}},
      {"fig6_slr", Geometry::Slr,
       {{{0, 0, 0}, {0.5, 0.75, 0}, {2.0 / 3.0, 0.25, -1.0 / 3.0}}}},
  };
  json files = json::array();
  for (const FigTriangle& ft : tris) {
    for (int s = 0; s < 3; ++s) {
      std::string name = ft.tag + "_side" + std::to_string(s) + ".csv";
      write_csv_polyline(path(name),
                         side_samples(ft.g, ft.v[s], ft.v[(s + 1) % 3], n));
      files.push_back(name);
    }
  }
  // fig 3: a Nil translation curve with its fibre projection
  {
    std::vector<ModelPoint> curve =
        side_samples(Geometry::Nil, {0, 0, 0}, {-1, 1, 1}, n);
    write_csv_polyline(path("fig3_nil_curve.csv"), curve);
    for (ModelPoint& p : curve) p.z = 0.0;
    write_csv_polyline(path("fig3_nil_projection.csv"), curve);
    files.push_back("fig3_nil_curve.csv");
    files.push_back("fig3_nil_projection.csv");
  }
  // fig 5: Sol sides projected to [x,z] and their half-plane m-images
  {
    const FigTriangle& ft = tris[2];
    for (int s = 0; s < 3; ++s) {
      std::vector<ModelPoint> curve =
          side_samples(Geometry::Sol, ft.v[s], ft.v[(s + 1) % 3], n);
      std::vector<ModelPoint> proj, mimg;
      for (const ModelPoint& p : curve) {
        PlanarPoint q = sol_project_xz(p);
        HalfPlanePoint m = sol_map_m(q);
        proj.push_back({q.a, 0.0, q.b});
        mimg.push_back({m.x1, m.x2, 0.0});
      }
      std::string pn = "fig5_sol_proj_side" + std::to_string(s) + ".csv";
      std::string mn = "fig5_sol_m_side" + std::to_string(s) + ".csv";
      write_csv_polyline(path(pn), proj);
      write_csv_polyline(path(mn), mimg);
      files.push_back(pn);
      files.push_back(mn);
    }
  }
  json j{{"schema", kSchema}, {"command", "figures"}, {"outdir", outdir},
         {"samples", n}, {"files", files}};
  emit(j, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation-triangle kernel for Nil, Sol and SL2R~"};
  app.require_subcommand(1);

  std::string geom = "nil", points, verts, output, outdir = ".";
  std::vector<double> direction, weights{1.0, 1.0, 1.0}, cuts{0.25, 0.6};
  double tparam = 1.0;
  int trials = 1000, resolution = 64, samples = 128;
  uint64_t seed = 12345;

  auto add_common = [&](CLI::App* c, bool with_output = true) {
    c->add_option("--geometry", geom, "nil, sol or slr")->capture_default_str();
    if (with_output) c->add_option("--output", output, "write JSON here instead of stdout");
  };

  CLI::App* curve = app.add_subcommand("curve", "evaluate or solve a translation curve");
  add_common(curve);
  curve->add_option("--target", points, "point to solve for, '(x,y,z)'");
  curve->add_option("--direction", direction, "two direction angles")->expected(2);
  curve->add_option("--t", tparam, "curve parameter for evaluation");

  CLI::App* dist = app.add_subcommand("distance", "translation distance of two points");
  add_common(dist);
  dist->add_option("--points", points, "'(x,y,z);(x,y,z)'")->required();

  CLI::App* ratio = app.add_subcommand("ratio", "signed simple ratio s(A,P,B)");
  add_common(ratio);
  ratio->add_option("--points", points, "'A;P;B'")->required();

  CLI::App* ceva = app.add_subcommand("ceva", "build and verify a cevian configuration");
  add_common(ceva);
  ceva->add_option("--vertices", verts, "2 or 3 triangle vertices")->required();
  ceva->add_option("--weights", weights, "barycentric weights of T")->expected(3);

  CLI::App* men = app.add_subcommand("menelaus", "build and verify a transversal configuration");
  add_common(men);
  men->add_option("--vertices", verts, "2 or 3 triangle vertices")->required();
  men->add_option("--cuts", cuts, "side parameters mu01 mu12")->expected(2);

  CLI::App* suite = app.add_subcommand("suite", "random verification suite");
  suite->add_option("--geometry", geom, "nil, sol, slr, e3, s3 or h3")
      ->capture_default_str();
  suite->add_option("--trials", trials, "")->capture_default_str();
  suite->add_option("--seed", seed, "")->envname("THURSTON_TRI_SEED");
  suite->add_option("--output", output, "write JSON here instead of stdout");

  CLI::App* surf = app.add_subcommand("surface", "mesh the translation-triangle surface");
  surf->add_option("--geometry", geom, "nil, sol or slr")->capture_default_str();
  surf->add_option("--vertices", verts, "2 or 3 triangle vertices")->required();
  surf->add_option("--resolution", resolution, "")->capture_default_str();
  surf->add_option("--output", output, "basename for .obj/.csv");

  CLI::App* figs = app.add_subcommand("figures", "emit figure polylines as CSV");
  figs->add_option("--outdir", outdir, "")->capture_default_str();
  figs->add_option("--samples", samples, "")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Tolerances tol;
    if (curve->parsed()) return run_curve(parse_geometry(geom), points, direction, tparam, output);
    if (dist->parsed()) {
      std::vector<ModelPoint> p = parse_points(points);
      if (p.size() != 2) throw CLI::ValidationError("--points", "expected two points");
      Geometry g = parse_geometry(geom);
      double d = g == Geometry::Nil   ? nil_distance(p[0], p[1])
                 : g == Geometry::Sol ? sol_distance(p[0], p[1])
                 : g == Geometry::Slr ? slr_distance(p[0], p[1])
                                      : throw CLI::ValidationError("--geometry", "unsupported");
      emit(json{{"schema", kSchema}, {"command", "distance"},
                {"geometry", geometry_name(g)}, {"distance", d}}, output);
      return 0;
    }
    if (ratio->parsed()) {
      std::vector<ModelPoint> p = parse_points(points);
      if (p.size() != 3) throw CLI::ValidationError("--points", "expected A;P;B");
      Geometry g = parse_geometry(geom);
      json j{{"schema", kSchema}, {"command", "ratio"}, {"geometry", geometry_name(g)}};
      if (g == Geometry::Nil) {
        j["ratio"] = to_json(nil_simple_ratio(p[0], p[1], p[2], tol));
      } else if (g == Geometry::Sol) {
        j["ratio"] = to_json(sol_simple_ratio(p[0], p[1], p[2], tol));
      } else if (g == Geometry::Slr) {
        j["ratio"] = to_json(slr_euclid_ratio(p[0], p[1], p[2], tol));
        j["arc_weighted_ratio"] = to_json(slr_simple_ratio(p[0], p[1], p[2], tol));
      } else {
        throw CLI::ValidationError("--geometry", "unsupported");
      }
      emit(j, output);
      return 0;
    }
    if (ceva->parsed()) {
      TriangleSpec tri = make_triangle(parse_geometry(geom), parse_points(verts));
      CevaConfig cfg = build_ceva(tri, {weights[0], weights[1], weights[2]}, tol);
      json j{{"schema", kSchema}, {"command", "ceva"}};
      j["report"] = to_json(verify(cfg, tol));
      emit(j, output);
      return 0;
    }
    if (men->parsed()) {
      TriangleSpec tri = make_triangle(parse_geometry(geom), parse_points(verts));
      MenelausConfig cfg = build_menelaus(tri, cuts[0], cuts[1], tol);
      json j{{"schema", kSchema}, {"command", "menelaus"}};
      j["report"] = to_json(verify(cfg, tol));
      emit(j, output);
      return 0;
    }
    if (suite->parsed()) return run_suite(geom, trials, seed, output);
    if (surf->parsed()) return run_surface(parse_geometry(geom), verts, resolution, output);
    if (figs->parsed()) return run_figures(outdir, samples);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const KernelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
