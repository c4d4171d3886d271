#include "icosa/equivariants.hpp"

namespace icosa {

EquivariantMap cross(const BivariateForm& g) {
  if (g.degree() < 1) throw std::invalid_argument("cross: degree < 1");
  return {g.dy(), -g.dx()};
}

const BasicEquivariants& basicEquivariants() {
  static const BasicEquivariants b = [] {
    const auto& ci = canonicalInvariants();
    BasicEquivariants r;
    r.phi = {-ci.F.dy(), ci.F.dx()};
    r.eta = {-ci.H.dy(), ci.H.dx()};
    r.eps = {BivariateForm::monomial(1, 0, 1), BivariateForm::monomial(0, 1, 1)};
    return r;
  }();
  return b;
}

EquivariantMap printedPhi() {
  return {formFromIntegers(11, {{11, -1}, {6, 66}, {1, 11}}),
          formFromIntegers(11, {{10, 11}, {5, -66}, {0, -1}})};
}

EquivariantMap printedEta() {
  return {formFromIntegers(19, {{15, -57}, {10, -247}, {5, 171}, {0, -1}}),
          formFromIntegers(19, {{19, 1}, {14, 171}, {9, 247}, {4, -57}})};
}

NumericMap familyMap(const MapFamilyCoefficients& c) {
  const auto& ci = canonicalInvariants();
  const auto& b = basicEquivariants();
  const NumericMap hphi = (ci.H * b.phi).convert<Complex>();
  const NumericMap feta = (ci.F * b.eta).convert<Complex>();
  return c.a * hphi + c.b * feta;
}

EquivariantMap familyMap(const Rational& a, const Rational& b) {
  const auto& ci = canonicalInvariants();
  const auto& e = basicEquivariants();
  return a * (ci.H * e.phi) + b * (ci.F * e.eta);
}

bool verifyModuleRelation(const Rational& t, const Rational& h, const Rational& f) {
  const auto& ci = canonicalInvariants();
  const auto& e = basicEquivariants();
  const EquivariantMap rel = t * (ci.T * e.eps) + h * (ci.H * e.phi) + f * (ci.F * e.eta);
  return rel.isZero();
}

CompiledMap::CompiledMap(const NumericMap& m) : degree_(m.degree()) {
  p_.assign(degree_ + 1, 0.0);
  q_.assign(degree_ + 1, 0.0);
  for (const auto& [i, c] : m.first.terms()) p_[i] = c;
  for (const auto& [i, c] : m.second.terms()) q_[i] = c;
}

std::pair<Complex, Complex> CompiledMap::components(Complex x, Complex y) const {
  Complex P = 0.0, Q = 0.0;
  if (std::abs(x) <= std::abs(y)) {
    const Complex u = x / y;
    for (int i = degree_; i >= 0; --i) {
      P = P * u + p_[i];
      Q = Q * u + q_[i];
    }
  } else {
    const Complex v = y / x;
    for (int i = 0; i <= degree_; ++i) {
      P = P * v + p_[i];
      Q = Q * v + q_[i];
    }
  }
  return {P, Q};
}

ProjectivePoint CompiledMap::operator()(const ProjectivePoint& p) const {
  const auto [P, Q] = components(p.x(), p.y());
  return {P, Q};
}

void CompiledMap::affine(Complex z, Complex& value, Complex& derivative) const {
  Complex P = 0.0, Q = 0.0, dP = 0.0, dQ = 0.0;
  for (int i = degree_; i >= 0; --i) {
    dP = dP * z + P;
    dQ = dQ * z + Q;
    P = P * z + p_[i];
    Q = Q * z + q_[i];
  }
  value = P / Q;
  derivative = (dP * Q - P * dQ) / (Q * Q);
}

double equivarianceDefect(const CompiledMap& m, const IcosaGroup& g, int samples, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    const ProjectivePoint p(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    const ProjectivePoint mp = m(p);
    for (std::size_t i = 0; i < g.size(); ++i)
      worst = std::max(worst, chordal(m(g.apply(i, p)), g.apply(i, mp)));
  }
  return worst;
}

std::vector<Table1Row> checkTable1(double tol) {
  const auto& s = icosaSpecialOrbits();
  const auto& e = basicEquivariants();
  const CompiledMap phi(e.phi), eta(e.eta);
  std::vector<Table1Row> rows;
  auto check = [&](const std::string& name, const CompiledMap& m, const char* orbit, const Orbit& o,
                   bool fixed) {
    Table1Row r{name, orbit, fixed ? "fixed" : "period-2"};
    for (const auto& p : o.points) {
      const ProjectivePoint target = fixed ? p : antipode(p);
      r.worst = std::max(r.worst, chordal(m(p), target));
    }
    r.passed = r.worst < tol;
    rows.push_back(r);
  };
  check("phi", phi, "vertex", s.vertices, true);
  check("phi", phi, "face", s.faces, false);
  check("phi", phi, "edge", s.edges, false);
  check("eta", eta, "vertex", s.vertices, false);
  check("eta", eta, "face", s.faces, true);
  check("eta", eta, "edge", s.edges, false);
  return rows;
}

}  // namespace icosa
