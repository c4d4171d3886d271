#include <doctest.h>

#include <numbers>
#include <random>

#include "icosa/dynamics.hpp"
#include "icosa/errors.hpp"

using namespace icosa;

namespace {

ProjectivePoint randomPoint(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return {Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
}

}  // namespace

TEST_CASE("cycle catalogs pair antipodes") {
  CHECK(dynamicsFor("g").cycles.size() == 30);
  CHECK(dynamicsFor("h").cycles.size() == 30);
  CHECK(dynamicsFor("phi").cycles.size() == 10);
  CHECK(dynamicsFor("eta").cycles.size() == 6);
  CHECK_THROWS_AS(dynamicsFor("psi"), std::invalid_argument);
  for (const char* name : {"g", "h", "phi", "eta"}) {
    const auto& d = dynamicsFor(name);
    for (const auto& c : d.cycles) {
      CHECK(chordal(d.map(c.p), c.q) < 1e-8);
      CHECK(chordal(d.map(c.q), c.p) < 1e-8);
    }
  }
}

TEST_CASE("g is critical on its cycles") {
  const auto& d = dynamicsFor("g");
  for (const auto& c : d.cycles) {
    for (const auto& p : {c.p, c.q}) {
      if (p.isInfinity(1e-3) || std::abs(p.toAffine()) > 1e3) continue;
      Complex v, dv;
      d.map.affine(p.toAffine(), v, dv);
      const double z2 = std::norm(p.toAffine()), v2 = std::norm(v);
      CHECK(std::abs(dv) * (1 + z2) / (1 + v2) < 1e-6);
    }
  }
}

TEST_CASE("a cycle point converges to its own cycle at once") {
  const auto& d = dynamicsFor("g");
  const auto r = convergeToCycle(d, d.cycles[3].p);
  CHECK(r.iterations == 0);
  CHECK(r.cycle == 3);
  CHECK(r.landed == d.cycles[3].pIndex);
}

TEST_CASE("almost every seed reaches a critical cycle") {
  const auto& d = dynamicsFor("g");
  std::mt19937_64 rng(20240601);
  int converged = 0;
  for (int i = 0; i < 10000; ++i) converged += convergeToCycle(d, randomPoint(rng)).cycle >= 0;
  CHECK(converged >= 9900);
}

TEST_CASE("convergence commutes with the group") {
  const auto& d = dynamicsFor("g");
  const auto& G = icosaGroup();
  std::mt19937_64 rng(7);
  for (int s = 0; s < 20; ++s) {
    const ProjectivePoint p = randomPoint(rng);
    const auto base = convergeToCycle(d, p);
    if (base.landed < 0) continue;
    for (std::size_t k = 0; k < G.size(); k += 7) {
      const auto moved = convergeToCycle(d, G.apply(k, p));
      REQUIRE(moved.landed >= 0);
      CHECK(chordal(d.critical.points[moved.landed], G.apply(k, d.critical.points[base.landed])) < 1e-6);
    }
  }
}

TEST_CASE("g preserves the real axis") {
  const auto& d = dynamicsFor("g");
  for (int i = 0; i < 50; ++i) {
    const double x = -3 + 6.0 * i / 49;
    const Complex v = d.map(ProjectivePoint::affine(x)).toAffine();
    CHECK(std::abs(v.imag()) <= 1e-9 * (1 + std::abs(v)));
  }
}

TEST_CASE("edge anchor") {
  const auto& d = dynamicsFor("g");
  const EdgeAnchor e = findEdgeAnchor(d);
  CHECK(std::abs(e.z - 0.143827) < 1e-5);
  CHECK(e.residual < 1e-12);
  CHECK(std::abs(e.multiplier) > 1);
  CHECK(std::abs(e.image + 1 / e.z) < 1e-9);
  CHECK(std::abs(std::abs(e.X) - 0.1713) < 1e-3);
  CHECK(std::abs(std::arg(e.X) - std::numbers::pi / 5) < 1e-9);
  // repelling: iteration from Z stalls without reaching a cycle
  CHECK(convergeToCycle(d, ProjectivePoint::affine(e.z)).cycle == -1);
}

TEST_CASE("edge anchor reports NotFound without a first-quadrant vertex") {
  Orbit poles;
  poles.points = {ProjectivePoint::affine(0.0), ProjectivePoint::infinity()};
  const auto d = makeDynamics("id", CompiledMap(basicEquivariants().eps), poles);
  CHECK(d.cycles.size() == 1);
  CHECK_THROWS_AS(findEdgeAnchor(d), NotFound);
}

TEST_CASE("segment trajectory ends at the two neighbouring vertices") {
  const auto& d = dynamicsFor("g");
  const EdgeAnchor e = findEdgeAnchor(d);
  double previous = 1;
  for (double h : {1e-2, 1e-3, 1e-4}) {
    const auto s = segmentTrajectory(d, e.z, h, 40);
    CHECK(std::abs(s.upperLimit - e.X) < 1e-8);
    CHECK(std::abs(s.lowerLimit - e.Y) < 1e-8);
    const double dist = hausdorffToArc(s, e);
    CHECK(dist < previous);
    previous = dist;
  }
}

TEST_CASE("circle through three points") {
  const Circle c = circleThrough(1.0, Complex(0, 1), -1.0);
  CHECK(std::abs(c.center) < 1e-12);
  CHECK(c.radius == doctest::Approx(1.0));
  CHECK_THROWS_AS(circleThrough(0.0, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("edges at a vertex are trisected") {
  const auto& d = dynamicsFor("g");
  const Trisection t = vertexTrisection(d, findEdgeAnchor(d));
  const double third = 2 * std::numbers::pi / 3;
  CHECK(std::abs(t.mirrorToUpper - third) < 0.01);
  CHECK(std::abs(t.mirrorToLower - third) < 0.01);
  CHECK(std::abs(t.between - third) < 0.01);
}

TEST_CASE("local degree") {
  const auto& e = basicEquivariants();
  const NumericMap g = specialMaps().first.map;
  CHECK(localDegree(g, dynamicsFor("g").critical.points[0]) == 2);
  CHECK(localDegree(g, ProjectivePoint::affine(Complex(0.3, 0.2))) == 1);
  CHECK(localDegree(e.phi.convert<Complex>(), icosaSpecialOrbits().faces.points[0]) == 2);
  CHECK(localDegree(e.eta.convert<Complex>(), ProjectivePoint::affine(0.0)) == 4);
  CHECK(localDegree(e.eta.convert<Complex>(), ProjectivePoint::infinity()) == 4);
  // The zero map gives no displacement to fit.
  NumericMap flat{BasicForm<Complex>(0), BasicForm<Complex>(0)};
  CHECK_THROWS_AS(localDegree(flat, ProjectivePoint::affine(0.5)), Inconclusive);
}
