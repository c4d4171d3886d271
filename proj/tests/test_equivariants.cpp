#include <doctest.h>

#include <random>

#include "icosa/equivariants.hpp"

using namespace icosa;

TEST_CASE("cross of x y") {
  const auto m = cross(BivariateForm::monomial(1, 1, 1));
  CHECK((m.first == BivariateForm::monomial(1, 0, 1)));
  CHECK((m.second == BivariateForm::monomial(0, 1, -1)));
  CHECK_THROWS_AS(cross(BivariateForm::monomial(0, 0, 3)), std::invalid_argument);
}

TEST_CASE("basic equivariants against the printed displays") {
  const auto& ci = canonicalInvariants();
  const auto& e = basicEquivariants();
  // The displayed phi is -cross(F); the displayed eta is -cross(H)/20.
  CHECK((cross(ci.F) == Rational(-1) * printedPhi()));
  CHECK((cross(ci.H) == Rational(-20) * printedEta()));
  CHECK((e.phi == printedPhi()));
  CHECK((e.eta == Rational(20) * printedEta()));
  CHECK(e.phi.degree() == 11);
  CHECK(e.eta.degree() == 19);
}

TEST_CASE("module relation") {
  CHECK(verifyModuleRelation());
  CHECK_FALSE(verifyModuleRelation(5, 5, 3));
  CHECK_FALSE(verifyModuleRelation(5, -5, -3));
  // Integer spot check at (1, 2).
  const auto& ci = canonicalInvariants();
  const auto& e = basicEquivariants();
  const Rational x = 1, y = 2;
  const Rational T = ci.T.evaluate(x, y), H = ci.H.evaluate(x, y), F = ci.F.evaluate(x, y);
  CHECK(5 * T * x + 5 * H * e.phi.first.evaluate(x, y) - 3 * F * e.eta.first.evaluate(x, y) == 0);
  CHECK(5 * T * y + 5 * H * e.phi.second.evaluate(x, y) - 3 * F * e.eta.second.evaluate(x, y) == 0);
}

TEST_CASE("degenerate family members") {
  const auto& ci = canonicalInvariants();
  const auto& e = basicEquivariants();
  CHECK((familyMap(5, -3) == Rational(-5) * (ci.T * e.eps)));
  CHECK((familyMap(1, 0) == ci.H * e.phi));
  CHECK((familyMap(0, 1) == ci.F * e.eta));
  CHECK(familyMap(2, 7).degree() == 31);
}

TEST_CASE("critical forms of the basic maps") {
  const auto& ci = canonicalInvariants();
  const auto& e = basicEquivariants();
  CHECK(normalizeToMatch(criticalForm(e.phi), ci.H) == -121);
  CHECK(normalizeToMatch(criticalForm(printedEta()), power(ci.F, 3)) == 4332);
  // eta is 20 times the display, so its Jacobian picks up 400.
  CHECK(normalizeToMatch(criticalForm(e.eta), power(ci.F, 3)) == 4332 * 400);
  CHECK((criticalForm(e.eps) == BivariateForm::monomial(0, 0, 1)));
}

TEST_CASE("critical forms of the degenerate 31-maps carry special-orbit multiplicities") {
  const auto& ci = canonicalInvariants();
  CHECK(normalizeToMatch(criticalForm(familyMap(1, 0)), power(ci.H, 3)) == -341);
  CHECK(normalizeToMatch(criticalForm(familyMap(0, 1)), power(ci.F, 5)) == 7068 * 400);
  // Euler: J(T x, T y) = (1 + deg T) T^2.
  CHECK(normalizeToMatch(criticalForm(familyMap(5, -3)), power(ci.T, 2)) == 25 * 31);
}

TEST_CASE("generic critical form has degree 60 and avoids F, H, T") {
  const auto J = criticalForm(familyMap(3, 7));
  CHECK(J.degree() == 60);
  // Nonzero x^60 and y^60 coefficients: J does not vanish at infinity or 0.
  CHECK(sgn(J.coefficient(60)) != 0);
  CHECK(sgn(J.coefficient(0)) != 0);
  const auto Jn = J.convert<Complex>();
  const auto& s = icosaSpecialOrbits();
  for (const Orbit* o : {&s.faces, &s.edges})
    for (const auto& p : o->points) {
      const double scale = std::pow(std::norm(p.x()) + std::norm(p.y()), 30);
      CHECK(std::abs(Jn.evaluate(p.x(), p.y())) / scale > 1e-6);
    }
}

TEST_CASE("equivariance of phi, eta and random family members") {
  const auto& g = icosaGroup();
  std::mt19937_64 rng(17);
  const auto& e = basicEquivariants();
  CHECK(equivarianceDefect(CompiledMap(e.phi), g, 20, rng) < 1e-8);
  CHECK(equivarianceDefect(CompiledMap(e.eta), g, 20, rng) < 1e-8);
  std::normal_distribution<double> n;
  for (int k = 0; k < 3; ++k) {
    const MapFamilyCoefficients c{Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
    CHECK(equivarianceDefect(CompiledMap(familyMap(c)), g, 20, rng) < 1e-8);
  }
}

TEST_CASE("Table 1 behavior on the special orbits") {
  for (const auto& row : checkTable1()) {
    INFO(row.map << " " << row.orbit << " " << row.expect << " worst " << row.worst);
    CHECK(row.passed);
  }
  const CompiledMap phi(basicEquivariants().phi), eta(basicEquivariants().eta);
  CHECK(phi(ProjectivePoint::infinity()).isInfinity(1e-15));
  CHECK(chordal(eta(ProjectivePoint::infinity()), ProjectivePoint::affine(0)) < 1e-15);
}

TEST_CASE("compiled evaluation agrees with the form evaluation") {
  const auto m = familyMap(MapFamilyCoefficients{1.0, 1.5954});
  const CompiledMap cm(m);
  std::mt19937_64 rng(23);
  std::normal_distribution<double> n;
  for (int k = 0; k < 50; ++k) {
    const ProjectivePoint p(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    const ProjectivePoint direct(m.first.evaluate(p.x(), p.y()), m.second.evaluate(p.x(), p.y()));
    CHECK(chordal(cm(p), direct) < 1e-12);
  }
  // Derivative against a central difference.
  const Complex z(0.31, -0.12), h(1e-6, 0);
  Complex v, d, vp, vm, dummy;
  cm.affine(z, v, d);
  cm.affine(z + h, vp, dummy);
  cm.affine(z - h, vm, dummy);
  CHECK(std::abs(d - (vp - vm) / (2.0 * h)) < 1e-5 * std::abs(d));
}
