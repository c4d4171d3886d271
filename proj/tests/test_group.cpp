#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "icosa/errors.hpp"
#include "icosa/group.hpp"

using namespace icosa;

namespace {

ProjectivePoint randomPoint(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return {Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
}

// Order by repeated matrix multiplication, independent of the group's table.
int bruteOrder(const Mat2& m) {
  Mat2 p = m;
  for (int k = 1; k <= 60; ++k) {
    if (sameProjective(p, Mat2{}, 1e-8)) return k;
    p = p * m;
  }
  return -1;
}

}  // namespace

TEST_CASE("group has 60 elements with the Alt(5) order census") {
  const auto& g = icosaGroup();
  REQUIRE(g.size() == 60);
  std::map<int, int> census;
  for (const auto& e : g.elements()) ++census[bruteOrder(e.matrix)];
  CHECK(census == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  CHECK(g.orderCensus() == census);
  for (const auto& e : g.elements()) CHECK(std::abs(e.determinant - 1.0) < 1e-10);
}

TEST_CASE("group is closed under composition and inverse") {
  const auto& g = icosaGroup();
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.inverse(static_cast<int>(i)) >= 0);
    for (std::size_t j = 0; j < g.size(); ++j)
      REQUIRE(g.multiply(static_cast<int>(i), static_cast<int>(j)) >= 0);
  }
}

TEST_CASE("a bad generator overflows the closure") {
  const Mat2 seventh = rotation(ProjectivePoint::infinity(), 2 * std::numbers::pi / 7);
  const Mat2 half = rotation(realEdgeMidpoint(), std::numbers::pi);
  CHECK_THROWS_AS(IcosaGroup::fromGenerators({seventh, half}), ClosureOverflow);
}

TEST_CASE("every element permutes the twelve vertices") {
  const auto& g = icosaGroup();
  const auto& v = icosaSpecialOrbits().vertices;
  REQUIRE(v.size() == 12);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& p : v.points) CHECK(v.find(g.apply(i, p), 1e-10).has_value());
}

TEST_CASE("printed vertex formulas") {
  const auto& v = icosaSpecialOrbits().vertices;
  int exact = 0, negated = 0;
  for (const auto& pv : printedVertexFormulas()) {
    if (v.find(ProjectivePoint::affine(pv.value), 1e-12)) ++exact;
    else if (v.find(ProjectivePoint::affine(-pv.value), 1e-12)) ++negated;
  }
  // The "+sqrt5" denominator branches are exact; the "-sqrt5" branches print
  // the negatives of true vertices.
  CHECK(exact == 6);
  CHECK(negated == 4);
}

TEST_CASE("antipode") {
  const auto a = antipode(ProjectivePoint::affine(0));
  CHECK(a.isInfinity(1e-15));
  const auto b = antipode(ProjectivePoint::affine({1, 1}));
  CHECK(std::abs(b.toAffine() - (-1.0 / std::conj(Complex(1, 1)))) < 1e-15);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto p = randomPoint(rng);
    CHECK(chordal(antipode(antipode(p)), p) < 1e-15);
    CHECK(sphericalDistance(antipode(p), p) == doctest::Approx(std::numbers::pi));
  }
}

TEST_CASE("rotation fixes its axis and turns by the requested angle") {
  const auto axis = ProjectivePoint::affine({0.3, -0.8});
  const Mat2 r = rotation(axis, 1.0);
  CHECK(chordal(r.apply(axis), axis) < 1e-14);
  CHECK(chordal(r.apply(antipode(axis)), antipode(axis)) < 1e-14);
  const auto about0 = rotation(ProjectivePoint::infinity(), 0.7);
  CHECK(std::abs(about0.apply(ProjectivePoint::affine(2.0)).toAffine() - 2.0 * std::polar(1.0, 0.7)) < 1e-14);
}

TEST_CASE("special orbits from the invariants") {
  const auto& s = icosaSpecialOrbits();
  CHECK(s.vertices.size() == 12);
  CHECK(s.faces.size() == 20);
  CHECK(s.edges.size() == 30);
  CHECK(s.vertices.label == OrbitLabel::Vertex);
  CHECK(s.faces.label == OrbitLabel::Face);
  CHECK(s.edges.label == OrbitLabel::Edge);
  CHECK(s.vertices.find(ProjectivePoint::infinity(), 1e-12));
  CHECK(s.vertices.find(ProjectivePoint::affine((1 + std::sqrt(5.0)) / 2), 1e-12));
  CHECK(s.vertices.find(ProjectivePoint::affine((1 - std::sqrt(5.0)) / 2), 1e-12));
  const auto faceOrbit = icosaGroup().orbitOf(s.faces.points[7]);
  CHECK(faceOrbit.size() == 20);
  for (const auto& p : s.faces.points) CHECK(faceOrbit.find(p, 1e-9));
  CHECK(s.edges.find(realEdgeMidpoint(), 1e-10));
}

TEST_CASE("orbitOf sizes") {
  const auto& g = icosaGroup();
  CHECK(g.orbitOf(ProjectivePoint::affine(0)).size() == 12);
  CHECK(g.orbitOf(realEdgeMidpoint()).size() == 30);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    const auto o = g.orbitOf(randomPoint(rng));
    CHECK(o.size() == 60);
    CHECK(o.label == OrbitLabel::Generic);
  }
}

TEST_CASE("fifteen mirrors with the real axis among them") {
  const auto& g = icosaGroup();
  REQUIRE(g.mirrors().size() == 15);
  REQUIRE(g.realAxisMirror() >= 0);
  for (double x : {-3.0, -0.2, 0.0, 0.7, 12.0}) {
    const auto m = g.mirrorContaining(ProjectivePoint::affine(x));
    REQUIRE(m.has_value());
    CHECK(g.mirrorsContaining(ProjectivePoint::affine(x), 1e-8).size() >= 1);
  }
  CHECK(g.mirrorContaining(ProjectivePoint::affine(0.7)) == g.realAxisMirror());
  std::mt19937_64 rng(8);
  int none = 0;
  for (int k = 0; k < 20; ++k) none += !g.mirrorContaining(randomPoint(rng)).has_value();
  CHECK(none == 20);
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = i + 1; j < 15; ++j) {
      const auto &a = g.mirrors()[i].normal, &b = g.mirrors()[j].normal;
      CHECK(std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) < 1 - 1e-6);
    }
}

TEST_CASE("mirror chart circles pass through the mirror's points") {
  const auto& g = icosaGroup();
  std::mt19937_64 rng(4);
  for (const auto& m : g.mirrors()) {
    // A point on the circle: rotate any point orthogonal to the normal.
    const Vec3& n = m.normal;
    Vec3 t{n[1], -n[0], 0.0};
    if (std::hypot(t[0], t[1]) < 1e-6) t = {0.0, n[2], -n[1]};
    const double len = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
    for (auto& c : t) c /= len;
    const auto p = ProjectivePoint::fromSphere(t);
    CHECK(g.reflect(m, p).toSphere()[0] == doctest::Approx(t[0]).epsilon(1e-9));
    if (p.isInfinity(1e-9)) continue;
    const Complex z = p.toAffine();
    if (m.chart.isLine) CHECK(std::abs((z * std::conj(m.chart.center)).imag()) < 1e-9);
    else CHECK(std::abs(z - m.chart.center) == doctest::Approx(m.chart.radius).epsilon(1e-9));
  }
}

TEST_CASE("stabilizer of the real axis is a Klein four-group") {
  const auto& g = icosaGroup();
  const auto stab = g.stabilizerOfRealAxis();
  REQUIRE(stab.size() == 4);
  for (int i : stab)
    if (i != 0) CHECK(g[i].order == 2);
}

TEST_CASE("special orbits lie on at least two mirrors") {
  const auto& g = icosaGroup();
  const auto& s = icosaSpecialOrbits();
  for (const Orbit* o : {&s.vertices, &s.faces, &s.edges})
    for (const auto& p : o->points) CHECK(g.mirrorsContaining(p, 1e-8).size() >= 2);
}

TEST_CASE("half-turns: antipodal edge-midpoint axes acting antipodally on their mirror") {
  const auto& g = icosaGroup();
  const auto& edges = icosaSpecialOrbits().edges;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
  for (const auto& m : g.mirrors()) {
    const auto axis = ProjectivePoint::fromSphere(m.normal);
    CHECK(edges.find(axis, 1e-9));
    CHECK(edges.find(antipode(axis), 1e-9));
    CHECK(chordal(g.apply(m.involution, axis), axis) < 1e-10);
    // Points of the circle orthogonal to the axis go to their antipodes.
    const Vec3& n = m.normal;
    Vec3 e1{n[1], -n[0], 0.0};
    if (std::hypot(e1[0], e1[1]) < 1e-6) e1 = {0.0, n[2], -n[1]};
    const double l = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (auto& c : e1) c /= l;
    const Vec3 e2{n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2], n[0] * e1[1] - n[1] * e1[0]};
    const double t = u(rng);
    const Vec3 q{std::cos(t) * e1[0] + std::sin(t) * e2[0], std::cos(t) * e1[1] + std::sin(t) * e2[1],
                 std::cos(t) * e1[2] + std::sin(t) * e2[2]};
    const auto p = ProjectivePoint::fromSphere(q);
    CHECK(chordal(g.apply(m.involution, p), antipode(p)) < 1e-10);
  }
}
