#include <doctest.h>

#include <random>

#include "icosa/errors.hpp"
#include "icosa/search.hpp"

using namespace icosa;

namespace {

Complex printedM(Complex z, Complex w) { return printedResidual().M.evaluate(z, w); }
Complex computedM(Complex z, Complex w) { return reconcileResidual().computed.M.evaluate(z, w); }

// J of the family member with the adjugate coefficients, via the generic form
// machinery: numeric Jacobian of the numeric map, then division by F H T.
Complex residualByForms(Complex z, Complex w) {
  const auto& ci = canonicalInvariants();
  const auto& e = basicEquivariants();
  auto at = [&](const BivariateForm& f) { return f.convert<Complex>().evaluate(z, Complex(1)); };
  const Complex Fz = at(ci.F), Hz = at(ci.H), Tz = at(ci.T);
  // Undo the division by the system determinant so (a, b) are the polynomial numerators.
  const Complex D = Hz * Fz * (at(e.phi.first) * at(e.eta.second) - at(e.phi.second) * at(e.eta.first));
  const auto c = solveCoefficients(z, w);
  const auto J = criticalForm(familyMap(MapFamilyCoefficients{c.a * D, c.b * D}));
  return J.evaluate(z, Complex(1)) / (Fz * Hz * Tz);
}

}  // namespace

TEST_CASE("pipeline quotient is a scalar multiple of the corrected residual") {
  const auto& r = reconcileResidual();
  CHECK(r.scalar == -12400);
  // The only difference from the printed list is its trailing constant.
  REQUIRE(r.differences.size() == 1);
  CHECK(r.differences[0].zExp == 0);
  CHECK(r.differences[0].wExp == 0);
  CHECK(r.differences[0].printed == 1);
  CHECK(r.differences[0].computed == 0);
  for (int k = 0; k < 3; ++k) CHECK(pipelineQuotient().byW[k] == r.scalar * r.computed.M.byW[k]);
}

TEST_CASE("criticalResidual oracle against the hard-coded residual at 100 random points") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> rad(0.2, 2.0), ang(0, 2 * std::numbers::pi);
  const double scalar = reconcileResidual().scalar.get_d();
  double worstCorrected = 0, worstPrinted = 0;
  for (int k = 0; k < 100; ++k) {
    const Complex z = std::polar(rad(rng), ang(rng)), w = std::conj(z);
    const Complex oracle = criticalResidual(z, w);
    worstCorrected = std::max(worstCorrected, std::abs(oracle / (scalar * computedM(z, w)) - 1.0));
    worstPrinted = std::max(worstPrinted, std::abs(oracle / (scalar * printedM(z, w)) - 1.0));
  }
  CHECK(worstCorrected < 1e-6);
  // The printed constant term shows up away from the large-|z| region.
  CHECK(worstPrinted > 1e-6);
}

TEST_CASE("criticalResidual matches the generic Jacobian of the family map") {
  std::mt19937_64 rng(32);
  std::normal_distribution<double> n;
  for (int k = 0; k < 10; ++k) {
    const Complex z(n(rng), n(rng)), w(n(rng), n(rng));
    const Complex a = criticalResidual(z, w), b = residualByForms(z, w);
    CHECK(std::abs(a - b) < 1e-7 * std::abs(a));
  }
}

TEST_CASE("residual at (1, 0) sums the pure z coefficients") {
  Rational sum = 0;
  for (const auto& c : reconcileResidual().computed.M.byW[0]) sum += c;
  const Complex r = criticalResidual(1.0, 0.0) / reconcileResidual().scalar.get_d();
  CHECK(r.real() == doctest::Approx(sum.get_d()).epsilon(1e-9));
  CHECK(std::abs(r.imag()) < 1e-6);
  Rational printedSum = 0;
  for (const auto& c : printedResidual().M.byW[0]) printedSum += c;
  CHECK(printedSum - sum == 1);
}

TEST_CASE("conjugation symmetry of the residual") {
  std::mt19937_64 rng(33);
  std::normal_distribution<double> n;
  for (int k = 0; k < 20; ++k) {
    const Complex z(n(rng), n(rng));
    const Complex a = criticalResidual(std::conj(z), z), b = std::conj(criticalResidual(z, std::conj(z)));
    CHECK(std::abs(a - b) < 1e-9 * std::abs(a));
  }
}

TEST_CASE("J / FHT stays bounded when approaching the special orbits") {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  const auto& s = icosaSpecialOrbits();
  for (const Orbit* o : {&s.vertices, &s.faces, &s.edges}) {
    for (int pick = 0; pick < 3; ++pick) {
      const auto& p = o->points[(pick * 7) % o->size()];
      if (p.isInfinity(1e-9) || std::abs(p.toAffine()) > 3) continue;
      const Complex c = p.toAffine();
      for (int dir = 0; dir < 10; ++dir) {
        const Complex u = std::polar(1.0, ang(rng));
        double prev = -1;
        for (double r : {1e-3, 1e-5, 1e-7}) {
          const Complex50 z = scalar_cast<Complex50>(c + r * u);
          const double v = static_cast<double>(abs(criticalResidual50(z, conj(z))));
          CHECK(std::isfinite(v));
          if (prev > 0) CHECK(v < 10 * prev + 1e-3);
          prev = v;
        }
      }
    }
  }
  CHECK_THROWS_AS(criticalResidual(0.0, 0.0), DivisionNearZero);
}

TEST_CASE("M splits as R + i S") {
  const auto& m = reconcileResidual().computed;
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int k = 0; k < 20; ++k) {
    const Complex z(u(rng), u(rng));
    const Complex M = m.M.evaluate(z, std::conj(z));
    const double scale = 1 + std::abs(M);
    CHECK(std::abs(m.evaluateR(z.real(), z.imag()) - M.real()) < 1e-6 * scale);
    CHECK(std::abs(m.evaluateS(z.real(), z.imag()) - M.imag()) < 1e-6 * scale);
  }
  const auto& printed = printedResidual();
  CHECK(printed.R.at({0, 0}) == 1);
}

TEST_CASE("real restriction equals the printed factorization") {
  const UPoly P = realRestriction(reconcileResidual().computed.M);
  CHECK(P.size() == 62);
  CHECK(P == printedRealRestriction());
  CHECK(sgn(P[0]) == 0);
  // The printed list restricted verbatim misses by exactly the constant 1.
  const UPoly verbatim = realRestriction(printedResidual().M);
  CHECK(verbatim - P == UPoly{Rational(1)});
}

TEST_CASE("root census of the real restriction") {
  const auto& c = realRestrictionRoots();
  CHECK(c.roots.size() == 61);
  CHECK(c.real.size() == 19);
  CHECK(c.counts.at(RootKind::Vertex) == 3);
  CHECK(c.counts.at(RootKind::Face) == 4);
  CHECK(c.counts.at(RootKind::Edge) == 4);
  CHECK(c.counts.at(RootKind::New) == 8);
  int seen = 0;
  for (const auto& r : c.real) {
    const double v = static_cast<double>(r.value);
    if (std::abs(v) < 1e-30 || std::abs(v - (1 + std::sqrt(5.0)) / 2) < 1e-14 ||
        std::abs(v - (1 - std::sqrt(5.0)) / 2) < 1e-14) {
      CHECK(r.kind == RootKind::Vertex);
      ++seen;
    }
  }
  CHECK(seen == 3);
  // Polished roots annihilate the restriction.
  const UPoly P = printedRealRestriction();
  std::vector<Real50> p50;
  for (const auto& q : P) p50.push_back(toReal50(q));
  for (const auto& r : c.real) {
    const Real50 v = r.value;
    Real50 scale = 0, acc = 0;
    for (auto it = p50.rbegin(); it != p50.rend(); ++it) {
      acc = acc * v + *it;
      scale = scale * abs(v) + abs(*it);
    }
    if (scale == 0) CHECK(acc == 0);
    else CHECK(static_cast<double>(abs(acc) / scale) < 1e-25);
  }
}

TEST_CASE("a census mismatch is reported") {
  const auto c = censusOf(fromDescending({1, 0, -1}));
  CHECK(c.real.size() == 2);
  CHECK_THROWS_AS(requireExpectedCensus(c), RootCountMismatch);
  CHECK_NOTHROW(requireExpectedCensus(realRestrictionRoots()));
}

TEST_CASE("solveCoefficients") {
  const auto& maps = specialMaps();
  const double z1 = maps.first.slice[0], z2 = maps.second.slice[0];
  const auto c1 = normalizedCoefficients(solveCoefficients(z1));
  const auto c2 = normalizedCoefficients(solveCoefficients(z2));
  CHECK(c1.b.real() == doctest::Approx(1.5954).epsilon(1e-4));
  CHECK(std::abs(c2.b.real() - 0.0280899) < 1e-6);
  CHECK(std::abs(c1.b.imag()) < 1e-12);
  CHECK_THROWS_AS(solveCoefficients(0.0), SingularSystem);
  // Every point of a real slice gives the same map.
  for (double z : maps.first.slice)
    CHECK(std::abs(normalizedCoefficients(solveCoefficients(z)).b - c1.b) < 1e-9);
  // f(p) = antipode(p) exactly in C^2 for the unnormalized solution.
  const Complex z(0.3, 0.2);
  const auto c = solveCoefficients(z);
  const auto m = familyMap(c);
  CHECK(std::abs(m.first.evaluate(z, Complex(1)) - 1.0) < 1e-9);
  CHECK(std::abs(m.second.evaluate(z, Complex(1)) + std::conj(z)) < 1e-9);
}

TEST_CASE("special maps reproduce the printed coefficients") {
  const auto& maps = specialMaps();
  for (const auto& [sol, printed] : {std::pair{&maps.first, printedG()}, std::pair{&maps.second, printedH()}}) {
    CHECK(std::abs(sol->coefficients.b.real() - printed.b) <= printed.bTol);
    const auto m = monicMap(sol->map);
    for (const auto& pc : printed.coefficients) {
      const auto& form = pc.component == 0 ? m.first : m.second;
      const Complex v = form.coefficient(pc.xExp);
      INFO(printed.name << " component " << pc.component << " x^" << pc.xExp << " printed " << pc.text
                        << " computed " << v.real());
      CHECK(std::abs(v.real() - pc.value) <= pc.tol);
      CHECK(std::abs(v.imag()) < 1e-9);
    }
    CHECK(m.first.termCount() == 7);
    CHECK(m.second.termCount() == 7);
  }
}

TEST_CASE("special map invariants on their orbits") {
  const auto& maps = specialMaps();
  for (const auto* s : {&maps.first, &maps.second}) {
    CHECK(s->orbit.size() == 60);
    CHECK(s->slice.size() == 4);
    const CompiledMap f(s->map);
    const auto Jn = criticalForm(s->map);
    double worstJ = 0, worstAnti = 0, worstTwo = 0;
    for (const auto& p : s->orbit.points) {
      // Relative to the size of J's terms at p.
      double scale = 0;
      for (const auto& [i, c] : Jn.terms())
        scale += std::abs(c) * std::pow(std::abs(p.x()), i) * std::pow(std::abs(p.y()), 60 - i);
      worstJ = std::max(worstJ, std::abs(Jn.evaluate(p.x(), p.y())) / scale);
      worstAnti = std::max(worstAnti, chordal(f(p), antipode(p)));
      worstTwo = std::max(worstTwo, chordal(f(f(p)), p));
    }
    CHECK(worstJ < 1e-6);
    CHECK(worstAnti < 1e-8);
    CHECK(worstTwo < 1e-8);
  }
}

TEST_CASE("polyhedron classification") {
  const auto& maps = specialMaps();
  CHECK(classifyPolyhedron(maps.first.orbit) == Polyhedron::Soccer);
  CHECK(classifyPolyhedron(maps.second.orbit) == Polyhedron::DualSoccer);
  CHECK_THROWS_AS(classifyPolyhedron(icosaSpecialOrbits().faces), std::invalid_argument);
  // A generic orbit has single nearest points.
  CHECK_THROWS_AS(classifyPolyhedron(icosaGroup().orbitOf(ProjectivePoint::affine({0.21, 0.05}))),
                  Unclassifiable);
}

TEST_CASE("critical orbits lie on mirrors") {
  const auto& g = icosaGroup();
  const auto& maps = specialMaps();
  for (const auto* s : {&maps.first, &maps.second})
    for (const auto& p : s->orbit.points) CHECK(g.mirrorContaining(p, 1e-8).has_value());
}

TEST_CASE("Newton iteration on (R, S)") {
  const NewtonSystem sys;
  const auto tri = fundamentalTriangle();
  const auto o = sys.run(tri[2]);
  CHECK(o.cls == kFace);
  CHECK(o.iterations <= 2);
  CHECK(icosaSpecialOrbits().faces.find(ProjectivePoint::affine(tri[2]), 1e-12));
  CHECK(std::abs(tri[1] - (1 - std::sqrt(5.0)) / 2) < 1e-15);
  const auto& maps = specialMaps();
  CHECK(sys.run(maps.first.slice[1] + 1e-3).cls == kSoccer);
  CHECK(sys.run(maps.second.slice[2] + 1e-3).cls == kDualSoccer);
}

TEST_CASE("Newton basins on the fundamental triangle") {
  const auto small = newtonBasins(10);
  CHECK(small.cells() == 45);
  const auto r = newtonBasins(300, 200, 1);
  CHECK(r.cells() == 300 * 299 / 2);
  CHECK(r.convergedFraction() >= 0.8);
  for (auto c : r.counts) CHECK(c > 0);
  const auto threaded = newtonBasins(120, 200, 4);
  const auto serial = newtonBasins(120, 200, 1);
  CHECK(threaded.cls == serial.cls);
  CHECK(threaded.iterations == serial.iterations);
}
