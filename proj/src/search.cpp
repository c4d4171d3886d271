#include "icosa/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "icosa/errors.hpp"
#include "icosa/parallel.hpp"
#include "icosa/roots.hpp"

namespace icosa {

Rational ZWPolynomial::coefficient(int zExp, int wExp) const {
  if (wExp < 0 || wExp > 2) return 0;
  const auto& p = byW[wExp];
  return zExp >= 0 && zExp < static_cast<int>(p.size()) ? p[zExp] : Rational(0);
}

namespace {

struct Gaussian {
  Rational re, im;
};

// (u + i v)^a as a map v-exponent -> coefficient; u exponent is a - key.
std::vector<Gaussian> binomialExpansion(int a, int sign) {
  std::vector<Gaussian> out(a + 1);
  Integer binom = 1;
  for (int k = 0; k <= a; ++k) {
    // (i * sign)^k
    const int phase = ((k % 4) + 4) % 4;
    Rational c(binom);
    if (sign < 0 && k % 2 == 1) c = -c;
    switch (phase) {
      case 0: out[k] = {c, 0}; break;
      case 1: out[k] = {0, c}; break;
      case 2: out[k] = {-c, 0}; break;
      default: out[k] = {0, -c}; break;
    }
    binom = binom * (a - k) / (k + 1);
  }
  return out;
}

double evalUV(const std::map<std::pair<int, int>, Rational>& p, double u, double v) {
  double acc = 0;
  for (const auto& [e, c] : p) acc += c.get_d() * std::pow(u, e.first) * std::pow(v, e.second);
  return acc;
}

}  // namespace

ResidualPolynomial ResidualPolynomial::from(const ZWPolynomial& m) {
  ResidualPolynomial r;
  r.M = m;
  for (int b = 0; b <= 2; ++b)
    for (std::size_t a = 0; a < m.byW[b].size(); ++a) {
      const Rational& c = m.byW[b][a];
      if (sgn(c) == 0) continue;
      const auto za = binomialExpansion(static_cast<int>(a), +1);
      const auto wb = binomialExpansion(b, -1);
      for (std::size_t i = 0; i < za.size(); ++i)
        for (std::size_t j = 0; j < wb.size(); ++j) {
          const Rational re = za[i].re * wb[j].re - za[i].im * wb[j].im;
          const Rational im = za[i].re * wb[j].im + za[i].im * wb[j].re;
          const int vExp = static_cast<int>(i + j);
          const std::pair<int, int> key{static_cast<int>(a) + b - vExp, vExp};
          if (sgn(re) != 0) r.R[key] += c * re;
          if (sgn(im) != 0) r.S[key] += c * im;
        }
    }
  std::erase_if(r.R, [](const auto& kv) { return sgn(kv.second) == 0; });
  std::erase_if(r.S, [](const auto& kv) { return sgn(kv.second) == 0; });
  return r;
}

double ResidualPolynomial::evaluateR(double u, double v) const { return evalUV(R, u, v); }
double ResidualPolynomial::evaluateS(double u, double v) const { return evalUV(S, u, v); }

const ResidualPolynomial& printedResidual() {
  static const ResidualPolynomial r = [] {
    // (z exponent, zbar exponent, coefficient) in printed order.
    const std::vector<std::array<long long, 3>> terms{
        {60, 1, 1},          {56, 2, -285},      {55, 1, 2820},       {54, 0, 3410},
        {51, 2, 3800},       {50, 1, -37794},    {49, 0, 83700},      {46, 2, -3799050},
        {45, 1, 7302980},    {44, 0, 12227175},  {41, 2, -15405600},  {40, 1, 23401665},
        {39, 0, 15580600},   {36, 2, -143079850}, {35, 1, 80976024},  {34, 0, 168348600},
        {31, 2, 203866260},  {29, 0, -203866260}, {26, 2, 168348600}, {25, 1, 80976024},
        {24, 0, -143079850}, {21, 2, -15580600}, {20, 1, -23401665},  {19, 0, 15405600},
        {16, 2, 12227175},   {15, 1, 7302980},   {14, 0, -3799050},   {11, 2, -83700},
        {10, 1, 37794},      {9, 0, -3800},      {6, 2, 3410},        {5, 1, 2820},
        {4, 0, -285},        {0, 1, -1},         {0, 0, 1}};
    ZWPolynomial m;
    for (auto& p : m.byW) p.assign(61, Rational(0));
    for (const auto& [z, w, c] : terms) m.byW[w][z] += Rational(static_cast<long>(c));
    for (auto& p : m.byW) trim(p);
    return ResidualPolynomial::from(m);
  }();
  return r;
}

namespace {

struct PipelineForms {
  UPoly F, H, T, phi1, phi2, eta1, eta2, JU, JUV, JV;
};

const PipelineForms& pipelineForms() {
  static const PipelineForms p = [] {
    const auto& ci = canonicalInvariants();
    const auto& e = basicEquivariants();
    const BivariateForm U1 = ci.H * e.phi.first, U2 = ci.H * e.phi.second;
    const BivariateForm V1 = ci.F * e.eta.first, V2 = ci.F * e.eta.second;
    PipelineForms r;
    r.F = dehomogenize(ci.F);
    r.H = dehomogenize(ci.H);
    r.T = dehomogenize(ci.T);
    r.phi1 = dehomogenize(e.phi.first);
    r.phi2 = dehomogenize(e.phi.second);
    r.eta1 = dehomogenize(e.eta.first);
    r.eta2 = dehomogenize(e.eta.second);
    r.JU = dehomogenize(jacobianDet(U1, U2));
    r.JUV = dehomogenize(jacobianDet(U1, V2) + jacobianDet(V1, U2));
    r.JV = dehomogenize(jacobianDet(V1, V2));
    return r;
  }();
  return p;
}

}  // namespace

const ZWPolynomial& pipelineQuotient() {
  static const ZWPolynomial q = [] {
    const auto& p = pipelineForms();
    // a = a0 + a1 w = F (eta2 + w eta1);  b = b0 + b1 w = -H (w phi1 + phi2)
    const UPoly a0 = p.F * p.eta2, a1 = p.F * p.eta1;
    const UPoly b0 = Rational(-1) * (p.H * p.phi2), b1 = Rational(-1) * (p.H * p.phi1);
    const std::array<UPoly, 3> aa{a0 * a0, Rational(2) * (a0 * a1), a1 * a1};
    const std::array<UPoly, 3> ab{a0 * b0, a0 * b1 + a1 * b0, a1 * b1};
    const std::array<UPoly, 3> bb{b0 * b0, Rational(2) * (b0 * b1), b1 * b1};
    const UPoly fht = p.F * p.H * p.T;
    ZWPolynomial out;
    for (int k = 0; k < 3; ++k)
      out.byW[k] = divideExact(aa[k] * p.JU + ab[k] * p.JUV + bb[k] * p.JV, fht);
    return out;
  }();
  return q;
}

const ResidualReconciliation& reconcileResidual() {
  static const ResidualReconciliation r = [] {
    ResidualReconciliation out;
    const ZWPolynomial& q = pipelineQuotient();
    out.scalar = q.coefficient(60, 1);
    if (sgn(out.scalar) == 0) throw NotProportional("pipeline quotient lacks the z^60 w term");
    ZWPolynomial m;
    for (int k = 0; k < 3; ++k) m.byW[k] = (Rational(1) / out.scalar) * q.byW[k];
    out.computed = ResidualPolynomial::from(m);
    const ZWPolynomial& printed = printedResidual().M;
    for (int w = 0; w < 3; ++w) {
      const std::size_t n = std::max(printed.byW[w].size(), m.byW[w].size());
      for (std::size_t z = 0; z < n; ++z) {
        const Rational a = printed.coefficient(static_cast<int>(z), w);
        const Rational b = m.coefficient(static_cast<int>(z), w);
        if (a != b) out.differences.push_back({static_cast<int>(z), w, a, b});
      }
    }
    return out;
  }();
  return r;
}

std::vector<UPoly> printedRealRestrictionFactors() {
  return {
      fromDescending({1, 0}),
      fromDescending({1, 0, 1}),
      fromDescending({1, -1, -1}),
      fromDescending({1, -2, -6, 2, 1}),
      fromDescending({1, 3, -1, -3, 1}),
      fromDescending({1,        0,       14,       -280,    161,      -1039,    364,     -666,
                      621,      27291,   -32823,   394034,  -241717,  557621,   -499383, 392493,
                      478383,   -854138, 1147057,  -3389037, 3865560, 1191562,  5421980, 744833,
                      10215020, -744833, 5421980,  -1191562, 3865560, 3389037,  1147057, 854138,
                      478383,   -392493, -499383,  -557621, -241717,  -394034,  -32823,  -27291,
                      621,      666,     364,      1039,    161,      280,      14,      0,
                      1}),
  };
}

UPoly printedRealRestriction() {
  UPoly r{Rational(1)};
  for (const auto& f : printedRealRestrictionFactors()) r = r * f;
  return r;
}

UPoly realRestriction(const ZWPolynomial& m) {
  UPoly r;
  for (int k = 0; k < 3; ++k) {
    UPoly shifted(k, Rational(0));
    shifted.insert(shifted.end(), m.byW[k].begin(), m.byW[k].end());
    r = r + shifted;
  }
  return r;
}

MapFamilyCoefficients solveCoefficients(Complex z, Complex w, double tol) {
  const auto& p = pipelineForms();
  const Complex F = evaluate(p.F, z), H = evaluate(p.H, z);
  const Complex U1 = H * evaluate(p.phi1, z), U2 = H * evaluate(p.phi2, z);
  const Complex V1 = F * evaluate(p.eta1, z), V2 = F * evaluate(p.eta2, z);
  const Complex D = U1 * V2 - U2 * V1;
  const double scale = std::hypot(std::abs(U1), std::abs(U2)) * std::hypot(std::abs(V1), std::abs(V2));
  if (!(std::abs(D) > tol * scale)) throw SingularSystem("coefficient system is singular at this point");
  return {(V2 + w * V1) / D, -(w * U1 + U2) / D};
}

MapFamilyCoefficients normalizedCoefficients(const MapFamilyCoefficients& c) {
  if (std::abs(c.a) == 0.0) throw SingularSystem("a = 0 cannot be normalized");
  return {1.0, c.b / c.a};
}

namespace {

template <class T>
T residualAt(const PipelineForms& p, const T& z, const T& w, const T& fht) {
  const T a = evaluate(p.F, z) * (evaluate(p.eta2, z) + w * evaluate(p.eta1, z));
  const T b = -evaluate(p.H, z) * (w * evaluate(p.phi1, z) + evaluate(p.phi2, z));
  const T J = a * a * evaluate(p.JU, z) + a * b * evaluate(p.JUV, z) + b * b * evaluate(p.JV, z);
  return J / fht;
}

}  // namespace

Complex criticalResidual(Complex z, Complex w, double tol) {
  const auto& p = pipelineForms();
  const Complex fht = evaluate(p.F, z) * evaluate(p.H, z) * evaluate(p.T, z);
  if (std::abs(fht) < tol * std::pow(1.0 + std::norm(z), 31))
    throw DivisionNearZero("F H T vanishes near this point");
  return residualAt(p, z, w, fht);
}

Complex50 criticalResidual50(const Complex50& z, const Complex50& w) {
  const auto& p = pipelineForms();
  const Complex50 fht = evaluate(p.F, z) * evaluate(p.H, z) * evaluate(p.T, z);
  if (abs(fht) == 0) throw DivisionNearZero("F H T vanishes at this point");
  return residualAt(p, z, w, fht);
}

std::string kindName(RootKind k) {
  switch (k) {
    case RootKind::Vertex: return "vertex";
    case RootKind::Face: return "face";
    case RootKind::Edge: return "edge";
    case RootKind::New: break;
  }
  return "new";
}

std::vector<double> RootCensus::newRoots() const {
  std::vector<double> out;
  for (const auto& r : real)
    if (r.kind == RootKind::New) out.push_back(static_cast<double>(r.value));
  return out;
}

RootCensus censusOf(const UPoly& restriction) {
  RootCensus c;
  c.roots = polishedRoots(restriction, 30);
  const auto& s = icosaSpecialOrbits();
  const Real50 realTol("1e-20");
  for (const auto& r : c.roots) {
    if (abs(r.imag()) >= realTol) continue;
    RealRoot rr{r.real(), RootKind::New};
    const auto p = ProjectivePoint::affine(static_cast<double>(rr.value));
    if (s.vertices.find(p, 1e-10)) rr.kind = RootKind::Vertex;
    else if (s.faces.find(p, 1e-10)) rr.kind = RootKind::Face;
    else if (s.edges.find(p, 1e-10)) rr.kind = RootKind::Edge;
    c.real.push_back(rr);
    ++c.counts[rr.kind];
  }
  std::sort(c.real.begin(), c.real.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return c;
}

void requireExpectedCensus(const RootCensus& c) {
  if (c.roots.size() != 61 || c.real.size() != 19)
    throw RootCountMismatch("expected 61 roots with 19 real, found " + std::to_string(c.roots.size()) +
                            " with " + std::to_string(c.real.size()) + " real");
}

const RootCensus& realRestrictionRoots() {
  static const RootCensus c = [] {
    RootCensus r = censusOf(realRestriction(reconcileResidual().computed.M));
    requireExpectedCensus(r);
    return r;
  }();
  return c;
}

std::string polyhedronName(Polyhedron p) { return p == Polyhedron::Soccer ? "soccer" : "dualSoccer"; }

namespace {

// True when every center has exactly `k` orbit points at its minimal distance.
bool ringsOf(const Orbit& centers, const Orbit& o, std::size_t k, double tol) {
  for (const auto& c : centers.points) {
    std::vector<double> d;
    for (const auto& p : o.points) d.push_back(sphericalDistance(c, p));
    std::sort(d.begin(), d.end());
    std::size_t n = 0;
    while (n < d.size() && d[n] - d[0] < tol) ++n;
    if (n != k) return false;
  }
  return true;
}

}  // namespace

Polyhedron classifyPolyhedron(const Orbit& o, double tol) {
  if (o.size() != 60) throw std::invalid_argument("classifyPolyhedron: orbit must have 60 points");
  const auto& s = icosaSpecialOrbits();
  const bool soccer = ringsOf(s.vertices, o, 5, tol);
  const bool dual = ringsOf(s.faces, o, 3, tol);
  if (soccer == dual) throw Unclassifiable("orbit matches neither or both truncations");
  return soccer ? Polyhedron::Soccer : Polyhedron::DualSoccer;
}

std::pair<SpecialMapSolution, SpecialMapSolution> buildSpecialMaps() {
  const auto& g = icosaGroup();
  const auto fresh = realRestrictionRoots().newRoots();
  const auto stab = g.stabilizerOfRealAxis();
  std::vector<bool> used(fresh.size(), false);
  std::vector<SpecialMapSolution> out;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (used[i]) continue;
    SpecialMapSolution s;
    const auto p = ProjectivePoint::affine(fresh[i]);
    for (int e : stab) {
      const auto q = g.apply(e, p);
      for (std::size_t j = 0; j < fresh.size(); ++j)
        if (!used[j] && chordal(q, ProjectivePoint::affine(fresh[j])) < 1e-9) {
          used[j] = true;
          s.slice.push_back(fresh[j]);
        }
    }
    std::sort(s.slice.begin(), s.slice.end());
    s.orbit = g.orbitOf(p);
    if (s.orbit.size() != 60)
      throw OrbitSizeError("orbit of a new root has " + std::to_string(s.orbit.size()) + " points");
    s.coefficients = normalizedCoefficients(solveCoefficients(fresh[i]));
    s.map = familyMap(s.coefficients);
    s.label = classifyPolyhedron(s.orbit);
    out.push_back(std::move(s));
  }
  if (out.size() != 2)
    throw OrbitSizeError("expected two real orbit slices, found " + std::to_string(out.size()));
  if (out[0].label == Polyhedron::DualSoccer) std::swap(out[0], out[1]);
  return {out[0], out[1]};
}

const std::pair<SpecialMapSolution, SpecialMapSolution>& specialMaps() {
  static const auto s = buildSpecialMaps();
  return s;
}

namespace {

PrintedCoefficient printedCoefficient(int component, int xExp, const std::string& text) {
  const auto dot = text.find('.');
  const int decimals = dot == std::string::npos ? -1 : static_cast<int>(text.size() - dot - 1);
  // Bare integers are structural (normalization), compared tightly.
  const double tol = decimals < 0 ? 1e-9 : std::pow(10.0, -decimals);
  return {component, xExp, text, std::stod(text), tol};
}

PrintedMap printedMap(const std::string& name, const std::string& b, const std::vector<std::string>& first,
                      const std::vector<std::string>& second) {
  PrintedMap m{name, b, std::stod(b), 0, {}};
  m.bTol = std::pow(10.0, -static_cast<int>(b.size() - b.find('.') - 1));
  m.coefficients.push_back(printedCoefficient(0, 31, "1"));
  for (int k = 0; k < 6; ++k) m.coefficients.push_back(printedCoefficient(0, 26 - 5 * k, first[k]));
  for (int k = 0; k < 6; ++k) m.coefficients.push_back(printedCoefficient(1, 30 - 5 * k, second[k]));
  m.coefficients.push_back(printedCoefficient(1, 0, "1"));
  return m;
}

}  // namespace

PrintedMap printedG() {
  return printedMap("g", "1.5954",
                    {"1980.7608", "-26690.072", "-129309.31", "61784.718", "7547.2935", "-42.908084"},
                    {"-42.908084", "-7547.2935", "61784.718", "129309.31", "-26690.072", "-1980.7608"});
}

PrintedMap printedH() {
  return printedMap("h", "0.0280899",
                    {"194.02245", "-14778.483", "-36994.493", "10533.539", "2531.8876", "-11.561797"},
                    {"-11.561797", "-2531.8876", "10533.539", "36994.493", "-14778.483", "-194.02245"});
}

NumericMap monicMap(const NumericMap& m) {
  const Complex lead = m.first.coefficient(31);
  if (std::abs(lead) == 0.0) throw SingularSystem("map has no x^31 term");
  return (1.0 / lead) * m;
}

NewtonSystem::NewtonSystem() {
  const ZWPolynomial& m = reconcileResidual().computed.M;
  for (int k = 0; k < 3; ++k) {
    for (const auto& c : m.byW[k]) m_[k].push_back(c.get_d());
    for (const auto& c : derivative(m.byW[k])) dm_[k].push_back(c.get_d());
  }
  const auto& s = icosaSpecialOrbits();
  const auto& maps = specialMaps();
  targets_ = {s.vertices, s.faces, s.edges, maps.first.orbit, maps.second.orbit};
}

void NewtonSystem::evaluate(Complex z, Complex& m, Complex& mz, Complex& mw) const {
  std::array<Complex, 3> v, dv;
  for (int k = 0; k < 3; ++k) {
    Complex a = 0.0, d = 0.0;
    for (auto it = m_[k].rbegin(); it != m_[k].rend(); ++it) a = a * z + *it;
    for (auto it = dm_[k].rbegin(); it != dm_[k].rend(); ++it) d = d * z + *it;
    v[k] = a;
    dv[k] = d;
  }
  const Complex w = std::conj(z);
  m = v[0] + w * (v[1] + w * v[2]);
  mz = dv[0] + w * (dv[1] + w * dv[2]);
  mw = v[1] + 2.0 * w * v[2];
}

int NewtonSystem::classify(Complex z) const {
  const auto p = ProjectivePoint::affine(z);
  for (int k = 0; k < 5; ++k)
    if (targets_[k].find(p, 1e-6)) return k;
  return kNone;
}

NewtonOutcome NewtonSystem::run(Complex z, int maxIter) const {
  NewtonOutcome out;
  for (int it = 0; it <= maxIter; ++it) {
    Complex m, mz, mw;
    evaluate(z, m, mz, mw);
    out.iterations = it;
    if (m == 0.0) break;
    const Complex du = mz + mw, dv = Complex(0, 1) * (mz - mw);
    // [[R_u, R_v], [S_u, S_v]] (du, dv)^T = -(R, S)
    const double det = du.real() * dv.imag() - dv.real() * du.imag();
    if (det == 0.0 || !std::isfinite(det)) return {kNone, it};
    const double su = (-m.real() * dv.imag() + dv.real() * m.imag()) / det;
    const double sv = (-du.real() * m.imag() + m.real() * du.imag()) / det;
    z += Complex(su, sv);
    if (!std::isfinite(z.real()) || std::abs(z) > 1e6) return {kNone, it + 1};
    if (std::hypot(su, sv) < 1e-13 * std::max(1.0, std::abs(z))) {
      out.iterations = it + 1;
      break;
    }
    if (it == maxIter) return {kNone, it};
  }
  out.cls = classify(z);
  return out;
}

std::array<Complex, 3> fundamentalTriangle() {
  const Complex a = 0.0, b = (1.0 - std::sqrt(5.0)) / 2.0;
  Complex best = 0.0;
  double bestD = 1e9;
  for (const auto& f : icosaSpecialOrbits().faces.points) {
    if (f.isInfinity(1e-12)) continue;
    const Complex z = f.toAffine();
    if (z.imag() <= 0) continue;
    const double d = std::max(sphericalDistance(f, ProjectivePoint::affine(a)),
                              sphericalDistance(f, ProjectivePoint::affine(b)));
    if (d < bestD) {
      bestD = d;
      best = z;
    }
  }
  return {a, b, best};
}

std::size_t NewtonRaster::converged() const {
  std::size_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

NewtonRaster newtonBasins(int rows, int maxIter, int threads) {
  if (rows < 2) throw std::invalid_argument("newtonBasins: need at least 2 rows");
  const NewtonSystem sys;
  const auto [A, B, C] = fundamentalTriangle();
  NewtonRaster r;
  r.rows = rows;
  for (int i = 0; i <= rows - 2; ++i)
    for (int j = 0; j <= i; ++j) {
      const double s = (i + 0.5) / (rows - 1), t = (j + 0.5) / (i + 1);
      r.centers.push_back(A + s * ((1.0 - t) * (B - A) + t * (C - A)));
    }
  r.cls.assign(r.centers.size(), kNone);
  r.iterations.assign(r.centers.size(), 0);
  parallelFor(r.centers.size(), threads, [&](std::size_t i) {
    const auto o = sys.run(r.centers[i], maxIter);
    r.cls[i] = static_cast<std::int8_t>(o.cls);
    r.iterations[i] = static_cast<std::int16_t>(o.iterations);
  });
  for (auto c : r.cls)
    if (c >= 0) ++r.counts[c];
  return r;
}

}  // namespace icosa
