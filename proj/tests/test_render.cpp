#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>

#include "icosa/render.hpp"

using namespace icosa;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("raster geometry") {
  Raster r(4, 2, Viewport{0, 0, 4, 2});
  CHECK(r.pixels.size() == 8);
  CHECK(r.center(0, 0) == Complex(0.5, 1.5));
  CHECK(r.pixelOf(Complex(3.9, 0.1)) == std::pair{3, 1});
  CHECK_FALSE(r.pixelOf(Complex(4.1, 0.1)));
  CHECK_THROWS_AS(Raster(3, 3, Viewport{1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("palettes") {
  const Palette n = Palette::newton();
  REQUIRE(n.size() == 5);
  CHECK(n[0] == RGB{220, 30, 30});
  CHECK(n[-1] == RGB{});
  for (int k : {5, 10, 30}) {
    const Palette p = Palette::cycles(k);
    std::set<std::tuple<int, int, int>> seen;
    for (int i = 0; i < k; ++i) {
      CHECK_FALSE(p[i] == RGB{});
      seen.insert({p[i].r, p[i].g, p[i].b});
    }
    CHECK(seen.size() == std::size_t(k));
  }
}

TEST_CASE("basins of g fill the chart square") {
  const auto& g = dynamicsFor("g");
  const BasinImage b = renderBasins(g, 500, 500);
  CHECK(b.colorsPresent() == 30);
  CHECK(b.nonConverged < 0.01);
  CHECK(klein4Score(b, g) > 0.99);
}

TEST_CASE("basins of h and phi") {
  const BasinImage h = renderBasins(dynamicsFor("h"), 500, 500);
  CHECK(h.colorsPresent() == 30);
  const BasinImage phi = renderBasins(dynamicsFor("phi"), 120, 120);
  CHECK(phi.counts.size() == 10);
  CHECK(phi.colorsPresent() == 10);
}

TEST_CASE("rendering does not depend on the thread count") {
  const auto& g = dynamicsFor("g");
  const BasinImage one = renderBasins(g, 97, 61, Viewport{-1, -0.5, 1, 1}, 1);
  const BasinImage three = renderBasins(g, 97, 61, Viewport{-1, -0.5, 1, 1}, 3);
  CHECK(one.image.pixels == three.image.pixels);
  CHECK(one.cycle == three.cycle);
}

TEST_CASE("julia proxy") {
  const auto& g = dynamicsFor("g");
  const JuliaImage j = renderJulia(g, 500, 500);
  const EdgeAnchor e = findEdgeAnchor(g);
  const auto z = j.image.pixelOf(e.z);
  REQUIRE(z);
  CHECK(j.isMarked(z->first, z->second));
  for (const auto& p : g.critical.points) {
    if (p.isInfinity(1e-9)) continue;
    const auto px = j.image.pixelOf(p.toAffine());
    if (px) CHECK_FALSE(j.isMarked(px->first, px->second));
  }
  CHECK(conjugationSymmetry(j) > 0.99);
}

TEST_CASE("soccer ball edges") {
  const auto& g = dynamicsFor("g");
  const auto mirrors = mirrorEdges(g);
  CHECK(mirrors.size() == 30);
  const auto& G = icosaGroup();
  for (const auto& m : mirrors) {
    const auto a = G.mirrorsContaining(m[0]), b = G.mirrorsContaining(m[1]);
    bool shared = false;
    for (int x : a)
      for (int y : b) shared = shared || x == y;
    CHECK(shared);
  }
  const auto pent = pentagonEdges(g);
  CHECK(pent.size() % 60 == 0);
}

TEST_CASE("newton raster image") {
  const NewtonRaster n = newtonBasins(40);
  const Raster r = renderNewton(n);
  CHECK(r.width == 39);
  const Palette p = Palette::newton();
  CHECK(r.at(0, 0) == p[n.cls[0]]);
  CHECK(r.at(38, 0) == RGB{});  // outside the triangle
}

TEST_CASE("orbit scatter") {
  const Orbit& o = dynamicsFor("g").critical;
  std::vector<int> labels(60);
  for (int i = 0; i < 60; ++i) labels[i] = 1 + i % 5;
  const Scatter grouped = exportOrbitScatter(o, labels, 120);
  CHECK(grouped.json["points"].size() == 60);
  CHECK(grouped.json["groups"]["3"] == 12);
  const Scatter plain = exportOrbitScatter(dynamicsFor("h").critical);
  CHECK(plain.json["count"] == 60);
  CHECK_FALSE(plain.json.contains("groups"));
  CHECK_THROWS_AS(exportOrbitScatter(o, {1, 2}), std::invalid_argument);
}

TEST_CASE("ppm output is byte exact") {
  Raster r(2, 1);
  r.at(0, 0) = {1, 2, 3};
  r.at(1, 0) = {255, 0, 7};
  const std::string path = "render_test.ppm";
  writePPM(r, path);
  CHECK(slurp(path) == std::string("P6\n2 1\n255\n\x01\x02\x03\xff\x00\x07", 17));
  std::remove(path.c_str());
  if (pngSupported()) {
    writeImage(r, "render_test.png");
    CHECK(slurp("render_test.png").substr(1, 3) == "PNG");
    std::remove("render_test.png");
  } else {
    CHECK_THROWS(writePNG(r, "render_test.png"));
  }
}
