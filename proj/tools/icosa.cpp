// Command-line front end.  Exit codes: 0 success, 1 failed check or computation
// error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "icosa/acceptance.hpp"
#include "icosa/dynamics.hpp"
#include "icosa/errors.hpp"
#include "icosa/parallel.hpp"
#include "icosa/render.hpp"
#include "icosa/resolvent.hpp"
#include "icosa/search.hpp"

using namespace icosa;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parseList(const std::string& s, std::size_t n, const std::string& what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": cannot parse '" + s + "'");
    }
  }
  if (v.size() != n) throw UsageError(what + ": expected " + std::to_string(n) + " comma-separated numbers");
  return v;
}

json complexJson(Complex z) { return json::array({z.real(), z.imag()}); }

json pointJson(const ProjectivePoint& p) {
  if (p.isInfinity(1e-15)) return "inf";
  return complexJson(p.toAffine());
}

std::string fmt(double v, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fmt(Complex z, int digits = 12) {
  return fmt(z.real(), digits) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag()), digits) + "i";
}

void emit(const json& j, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << j.dump(2) << "\n";
}

int verify(const RunConfig& cfg, bool asJson, const std::vector<int>& which) {
  const auto results = runAcceptance(cfg, which);
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (asJson) {
      list.push_back(resultJson(r));
      continue;
    }
    std::printf("[%s] criterion %d: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str());
    for (const auto& c : r.checks)
      std::printf("    [%s] %s%s%s\n", c.counted ? (c.passed ? "pass" : "FAIL") : "info", c.name.c_str(),
                  c.measured.empty() ? "" : ": ", c.measured.c_str());
  }
  if (asJson) emit({{"seed", cfg.seed}, {"passed", all}, {"criteria", list}}, cfg);
  return all ? 0 : 1;
}

int group(const RunConfig& cfg, bool asJson, bool exportAll) {
  const auto& G = icosaGroup();
  const auto& so = icosaSpecialOrbits();
  json census = json::object();
  for (const auto& [order, count] : G.orderCensus()) census[std::to_string(order)] = count;
  json j{{"order", G.size()},
         {"elementOrders", census},
         {"mirrors", G.mirrors().size()},
         {"orbits", {{"vertices", so.vertices.size()}, {"faces", so.faces.size()}, {"edges", so.edges.size()}}}};
  if (exportAll) {
    json elements = json::array();
    for (const auto& e : G.elements())
      elements.push_back({{"order", e.order},
                          {"matrix", {complexJson(e.matrix.a), complexJson(e.matrix.b), complexJson(e.matrix.c),
                                      complexJson(e.matrix.d)}}});
    j["elements"] = elements;
    auto pts = [](const Orbit& o) {
      json a = json::array();
      for (const auto& p : o.points) a.push_back(pointJson(p));
      return a;
    };
    j["vertices"] = pts(so.vertices);
    j["faces"] = pts(so.faces);
    j["edges"] = pts(so.edges);
    json mirrors = json::array();
    for (const auto& m : G.mirrors())
      mirrors.push_back({{"normal", {m.normal[0], m.normal[1], m.normal[2]}}, {"involution", m.involution}});
    j["mirrorList"] = mirrors;
  }
  if (asJson || exportAll) {
    emit(j, cfg);
    return 0;
  }
  std::printf("group order %zu, %zu mirrors\n", G.size(), G.mirrors().size());
  for (const auto& [order, count] : G.orderCensus()) std::printf("  order %d: %d elements\n", order, count);
  std::printf("vertices %zu, face centers %zu, edge midpoints %zu\n", so.vertices.size(), so.faces.size(),
              so.edges.size());
  return 0;
}

int search(const RunConfig& cfg, bool asJson, const std::string& newtonOut, int rows) {
  const auto& c = realRestrictionRoots();
  const auto& maps = specialMaps();
  const auto& rr = reconcileResidual();
  json roots = json::array();
  for (const auto& r : c.real) roots.push_back({{"value", r.value.str(cfg.digits)}, {"kind", kindName(r.kind)}});
  json j{{"residualScalar", rr.scalar.get_str()},
         {"roots", c.roots.size()},
         {"realRoots", roots},
         {"maps", json::array()}};
  for (const auto* s : {&maps.first, &maps.second})
    j["maps"].push_back({{"name", s == &maps.first ? "g" : "h"},
                         {"B", s->coefficients.b.real()},
                         {"slice", s->slice},
                         {"orbit", s->orbit.size()},
                         {"polyhedron", polyhedronName(s->label)}});
  if (!newtonOut.empty()) {
    const NewtonRaster n = newtonBasins(rows, 200, cfg.threads);
    writeImage(renderNewton(n), newtonOut);
    j["newton"] = {{"rows", rows}, {"cells", n.cells()}, {"convergedFraction", n.convergedFraction()}};
  }
  if (asJson) {
    emit(j, cfg);
    return 0;
  }
  std::printf("J/(FHT) = %s M\n%zu roots of the real restriction, %zu real:\n", rr.scalar.get_str().c_str(),
              c.roots.size(), c.real.size());
  for (const auto& r : c.real) std::printf("  %-8s %s\n", kindName(r.kind).c_str(), r.value.str(cfg.digits).c_str());
  for (const auto* s : {&maps.first, &maps.second})
    std::printf("%s: B = %s, %zu-point orbit, %s\n", s == &maps.first ? "g" : "h",
                fmt(s->coefficients.b.real()).c_str(), s->orbit.size(), polyhedronName(s->label).c_str());
  if (!newtonOut.empty())
    std::printf("Newton basins (%d rows): %.4f classified, written to %s\n", rows,
                j["newton"]["convergedFraction"].get<double>(), newtonOut.c_str());
  return 0;
}

int dynamics(const RunConfig& cfg, bool asJson, const std::string& mapName, const std::string& start, bool trace,
             bool anchor) {
  const MapDynamics& d = dynamicsFor(mapName);
  json j{{"map", mapName}, {"seed", cfg.seed}};
  if (anchor) {
    if (mapName != "g") throw UsageError("--edge-anchor applies to --map g");
    const EdgeAnchor e = findEdgeAnchor(d);
    const SegmentTrajectory s = segmentTrajectory(d, e.z, 1e-3, 40);
    const Trisection t = vertexTrisection(d, e);
    j["edgeAnchor"] = {{"z", e.z},
                       {"residual", e.residual},
                       {"image", e.image},
                       {"multiplier", e.multiplier},
                       {"X", complexJson(e.X)},
                       {"Y", complexJson(e.Y)},
                       {"upperLimit", complexJson(s.upperLimit)},
                       {"lowerLimit", complexJson(s.lowerLimit)},
                       {"hausdorff", hausdorffToArc(s, e)},
                       {"trisection", {t.mirrorToUpper, t.mirrorToLower, t.between}}};
  } else {
    ProjectivePoint p0;
    if (start.empty()) {
      std::mt19937_64 rng(cfg.seed);
      std::normal_distribution<double> n;
      p0 = ProjectivePoint(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    } else {
      const auto v = parseList(start, 2, "--start");
      p0 = ProjectivePoint::affine({v[0], v[1]});
    }
    ConvergeOptions o;
    o.keepHistory = trace;
    const TrajectoryResult r = convergeToCycle(d, p0, o);
    j["start"] = pointJson(p0);
    j["iterations"] = r.iterations;
    j["converged"] = r.limit.has_value();
    if (r.limit) {
      j["cycle"] = r.cycle;
      j["limit"] = {pointJson(r.limit->p), pointJson(r.limit->q)};
    }
    if (trace) {
      json h = json::array();
      for (const auto& p : r.history) h.push_back(pointJson(p));
      j["trace"] = h;
    }
  }
  if (asJson) {
    emit(j, cfg);
    return 0;
  }
  if (anchor) {
    const auto& e = j["edgeAnchor"];
    std::printf("edge anchor Z = %s, |g^2(Z) - Z| = %s, g(Z) = %s, multiplier %s\n",
                fmt(e["z"].get<double>()).c_str(), fmt(e["residual"].get<double>(), 3).c_str(),
                fmt(e["image"].get<double>()).c_str(), fmt(e["multiplier"].get<double>(), 6).c_str());
    std::printf("segment endpoints -> %s and %s\n", fmt(Complex(e["upperLimit"][0], e["upperLimit"][1])).c_str(),
                fmt(Complex(e["lowerLimit"][0], e["lowerLimit"][1])).c_str());
    std::printf("Hausdorff distance to the circular arc: %s\n", fmt(e["hausdorff"].get<double>(), 3).c_str());
    std::printf("angles at the vertex: %s %s %s\n", fmt(e["trisection"][0].get<double>(), 7).c_str(),
                fmt(e["trisection"][1].get<double>(), 7).c_str(), fmt(e["trisection"][2].get<double>(), 7).c_str());
    return 0;
  }
  std::printf("map %s from %s: ", mapName.c_str(), j["start"].dump().c_str());
  if (j["converged"].get<bool>())
    std::printf("2-cycle %d after %d iterations\n", j["cycle"].get<int>(), j["iterations"].get<int>());
  else
    std::printf("no limit after %d iterations\n", j["iterations"].get<int>());
  if (trace)
    for (const auto& p : j["trace"]) std::printf("  %s\n", p.dump().c_str());
  return 0;
}

int render(const RunConfig& cfg, bool asJson, const std::string& mapName, const std::string& kind, int res,
           const std::string& viewport) {
  if (cfg.out.empty()) throw UsageError("render needs --out");
  if (res < 2 || res > 8000) throw UsageError("--res must lie in [2, 8000]");
  Viewport v;
  if (!viewport.empty()) {
    const auto b = parseList(viewport, 4, "--viewport");
    v = {b[0], b[1], b[2], b[3]};
  }
  try {
    v.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j{{"map", mapName}, {"kind", kind}, {"res", res}, {"out", cfg.out}};
  if (kind == "basins") {
    const auto& d = dynamicsFor(mapName);
    const BasinImage b = renderBasins(d, res, res, v, cfg.threads);
    writeImage(b.image, cfg.out);
    j["colors"] = b.colorsPresent();
    j["nonConverged"] = b.nonConverged;
  } else if (kind == "julia") {
    const auto& d = dynamicsFor(mapName);
    JuliaOptions o;
    o.threads = cfg.threads;
    const JuliaImage ji = renderJulia(d, res, res, v, o);
    writeImage(ji.image, cfg.out);
    j["threshold"] = ji.threshold;
    j["conjugationSymmetry"] = conjugationSymmetry(ji);
  } else if (kind == "newton") {
    const NewtonRaster n = newtonBasins(res, 200, cfg.threads);
    writeImage(renderNewton(n), cfg.out);
    j["convergedFraction"] = n.convergedFraction();
  } else if (kind == "scatter") {
    const auto& d = dynamicsFor(mapName);
    std::vector<int> labels;
    if (mapName == "g") labels = tauDecomposition(d.critical);
    const Scatter s = exportOrbitScatter(d.critical, labels, res);
    writeImage(s.image, cfg.out);
    j["scatter"] = s.json;
  } else {
    throw UsageError("--kind must be basins, julia, newton or scatter");
  }
  if (asJson)
    std::cout << j.dump(2) << "\n";
  else
    std::printf("wrote %s (%s, %dx%d)\n", cfg.out.c_str(), kind.c_str(), res, res);
  return 0;
}

int resolvent(const RunConfig& cfg, bool asJson, const std::string& zText, bool demo, int seeds) {
  json j{{"seed", cfg.seed}};
  if (!zText.empty()) {
    const auto v = parseList(zText, 2, "--z");
    const ResolventQuintic q = resolventAt({v[0], v[1]});
    json a = json::array();
    for (const auto& c : q.a) a.push_back(complexJson(c));
    json roots = json::array();
    for (const auto& r : q.roots) roots.push_back(complexJson(r));
    j["z"] = complexJson(q.z);
    j["coefficients"] = a;
    j["roots"] = roots;
    j["F"] = complexJson(q.F);
    j["H"] = complexJson(q.H);
    j["icosahedralFunction"] = complexJson(q.icosaParameter);
  } else if (demo) {
    if (seeds < 1) throw UsageError("--seeds must be positive");
    if (seeds == 1) {
      std::mt19937_64 rng(cfg.seed);
      std::normal_distribution<double> n;
      const DemoReport r = symmetryBreakingDemo(ProjectivePoint(Complex(n(rng), n(rng)), Complex(n(rng), n(rng))));
      json tau = json::array();
      for (const auto& p : r.tau) tau.push_back(pointJson(p));
      j["demo"] = {{"iterations", r.iterations}, {"label", r.label},     {"partnerLabel", r.partnerLabel},
                   {"consistent", r.consistent()}, {"tau", tau}};
    } else {
      const DemoStatistics s = symmetryBreakingStatistics(seeds, cfg.seed, cfg.threads);
      j["demo"] = {{"seeds", s.seeds}, {"converged", s.converged}, {"consistent", s.consistent}, {"byLabel", s.byLabel}};
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    const ResolventFit f = fitResolvent(50, rng);
    j["fit"] = {{"samples", f.samples},        {"b", complexJson(f.b)},        {"c", complexJson(f.c)},
                {"bSpread", f.bSpread},        {"cSpread", f.cSpread},         {"worstRelative", f.worstRelative},
                {"rootMismatch", f.rootMismatch}};
  }
  if (asJson) {
    emit(j, cfg);
    return 0;
  }
  if (j.contains("coefficients")) {
    std::printf("z = %s, F^5/H^3 = %s\n", fmt(Complex(j["z"][0], j["z"][1])).c_str(),
                fmt(Complex(j["icosahedralFunction"][0], j["icosahedralFunction"][1])).c_str());
    for (int k = 0; k < 6; ++k)
      std::printf("  a%d = %s\n", k, fmt(Complex(j["coefficients"][k][0], j["coefficients"][k][1])).c_str());
  } else if (j.contains("demo")) {
    std::printf("%s\n", j["demo"].dump(2).c_str());
  } else {
    const auto& f = j["fit"];
    std::printf("a5/H = %s (spread %s)\n", fmt(Complex(f["c"][0], f["c"][1])).c_str(),
                fmt(f["cSpread"].get<double>(), 3).c_str());
    std::printf("a3/F = %s (spread %s)\n", fmt(Complex(f["b"][0], f["b"][1])).c_str(),
                fmt(f["bSpread"].get<double>(), 3).c_str());
    for (int k : {1, 2, 4})
      std::printf("worst |a%d| relative: %s\n", k, fmt(f["worstRelative"][k].get<double>(), 3).c_str());
    std::printf("reduced quintic root mismatch: %s\n", fmt(f["rootMismatch"].get<double>(), 3).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"icosahedral maps: verification, search, dynamics, rendering"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.threads = defaultThreads();
  double tol = 0;
  bool asJson = false;
  auto* tolOpt = app.add_option("--tol", tol, "geometric tolerance override");
  app.add_option("--digits", cfg.digits, "digits for extended-precision output (15..50)");
  app.add_option("--threads", cfg.threads, "worker threads (default ICOSA_THREADS or hardware)");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.out, "output path");
  app.add_flag("--json", asJson, "JSON output");

  auto* verifyCmd = app.add_subcommand("verify", "run the acceptance criteria");
  std::vector<int> criteria;
  verifyCmd->add_option("--criteria", criteria, "subset to run");

  auto* groupCmd = app.add_subcommand("group", "the group, its mirrors and special orbits");
  bool exportAll = false;
  groupCmd->add_flag("--export", exportAll, "write elements, orbits and mirrors as JSON");

  auto* searchCmd = app.add_subcommand("search", "residual roots and the special maps");
  std::string newtonOut;
  int newtonRows = 300;
  searchCmd->add_option("--newton-png", newtonOut, "write the Newton basin triangle");
  searchCmd->add_option("--res", newtonRows, "triangle rows")->check(CLI::Range(3, 4000));

  auto* dynCmd = app.add_subcommand("dynamics", "iterate a map to its 2-cycle");
  std::string mapName = "g", start;
  bool trace = false, anchor = false;
  dynCmd->add_option("--map", mapName, "g, h, phi or eta")->check(CLI::IsMember({"g", "h", "phi", "eta"}));
  dynCmd->add_option("--start", start, "starting point re,im (default random from --seed)");
  dynCmd->add_flag("--trace", trace, "print every iterate");
  dynCmd->add_flag("--edge-anchor", anchor, "edge anchor, segment trajectory and vertex angles");

  auto* renderCmd = app.add_subcommand("render", "basin, Julia, Newton or orbit images");
  std::string renderMap = "g", kind = "basins", viewport;
  int res = 500;
  renderCmd->add_option("--map", renderMap, "g, h, phi or eta")->check(CLI::IsMember({"g", "h", "phi", "eta"}));
  renderCmd->add_option("--kind", kind, "basins, julia, newton or scatter");
  renderCmd->add_option("--res", res, "image side in pixels");
  renderCmd->add_option("--viewport", viewport, "x0,y0,x1,y1");

  auto* resCmd = app.add_subcommand("resolvent", "tetrahedral quintic and the symmetry-breaking demo");
  std::string zText;
  bool demo = false;
  int seeds = 1;
  resCmd->add_option("--z", zText, "evaluate the quintic at re,im");
  resCmd->add_flag("--demo", demo, "run the symmetry-breaking demo");
  resCmd->add_option("--seeds", seeds, "number of demo seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*tolOpt) cfg.tol = tol;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (*verifyCmd) return verify(cfg, asJson, criteria);
    if (*groupCmd) return group(cfg, asJson, exportAll);
    if (*searchCmd) return search(cfg, asJson, newtonOut, newtonRows);
    if (*dynCmd) return dynamics(cfg, asJson, mapName, start, trace, anchor);
    if (*renderCmd) return render(cfg, asJson, renderMap, kind, res, viewport);
    if (*resCmd) return resolvent(cfg, asJson, zText, demo, seeds);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
