#include "icosa/group.hpp"

#include <cmath>
#include <numbers>

#include "icosa/errors.hpp"
#include "icosa/forms.hpp"
#include "icosa/roots.hpp"

namespace icosa {

std::string labelName(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::Vertex: return "vertex";
    case OrbitLabel::Face: return "face";
    case OrbitLabel::Edge: return "edge";
    case OrbitLabel::Generic: return "generic";
    case OrbitLabel::Other: break;
  }
  return "other";
}

std::optional<std::size_t> Orbit::find(const ProjectivePoint& p, double tol) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (chordal(points[i], p) < tol) return i;
  return std::nullopt;
}

namespace {

// Fixes the sign of a determinant-one lift so each projective element has one
// canonical representative.
Mat2 canonicalSign(const Mat2& m) {
  for (const Complex& e : {m.a, m.b, m.c, m.d}) {
    if (std::abs(e) < 1e-8) continue;
    const bool flip = std::abs(e.real()) > 1e-8 ? e.real() < 0 : e.imag() < 0;
    return flip ? Complex(-1.0) * m : m;
  }
  return m;
}

ChartCircle chartCircle(const Vec3& n) {
  ChartCircle c;
  if (std::abs(n[2]) < 1e-12) {
    c.isLine = true;
    c.center = Complex(-n[1], n[0]) / std::hypot(n[0], n[1]);
    return c;
  }
  c.center = -Complex(n[0], n[1]) / n[2];
  c.radius = std::sqrt(std::norm(c.center) + 1.0);
  return c;
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Orbit orbitFromAffineRoots(const IcosaGroup& g, const BivariateForm& f, bool withInfinity) {
  std::vector<Rational> ascending(f.degree() + 1);
  for (const auto& [i, c] : f.terms()) ascending[i] = c;
  Orbit o;
  for (const auto& r : polishedRoots(ascending, 30))
    o.points.push_back(ProjectivePoint::affine(scalar_cast<Complex>(r)));
  if (withInfinity) o.points.push_back(ProjectivePoint::infinity());

  const Orbit generated = g.orbitOf(o.points.front());
  if (generated.size() != o.size())
    throw RootFindingFailure("root set is not a single group orbit");
  for (const auto& p : o.points)
    if (!generated.find(p, 1e-9)) throw RootFindingFailure("root does not lie on generated orbit");
  o.label = generated.label;
  return o;
}

}  // namespace

ProjectivePoint realEdgeMidpoint() {
  const double v = (std::sqrt(5.0) - 1.0) / 2.0;  // |(1 - sqrt 5)/2|
  return ProjectivePoint::affine(-std::tan(std::atan(v) / 2.0));
}

IcosaGroup IcosaGroup::build(double tol) {
  const double pi = std::numbers::pi;
  const Mat2 fifthTurn = rotation(ProjectivePoint::infinity(), 2.0 * pi / 5.0);
  const Mat2 halfTurn = rotation(realEdgeMidpoint(), pi);
  return fromGenerators({fifthTurn, halfTurn}, tol);
}

IcosaGroup IcosaGroup::fromGenerators(const std::vector<Mat2>& generators, double tol) {
  IcosaGroup g;
  g.tol_ = tol;
  std::vector<Mat2> gens;
  for (const auto& m : generators) gens.push_back(m.unimodular());

  std::vector<Mat2> found{Mat2{}};
  std::vector<Mat2> frontier{Mat2{}};
  auto known = [&](const Mat2& m) {
    for (const auto& e : found)
      if (sameProjective(e, m, 1e-7)) return true;
    return false;
  };
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const auto& f : frontier)
      for (const auto& s : gens) {
        const Mat2 m = s * f;
        if (known(m)) continue;
        found.push_back(m);
        next.push_back(m);
        if (found.size() > 120) throw ClosureOverflow("closure exceeded 120 projective elements");
      }
    frontier = std::move(next);
  }
  for (const auto& m : found) g.elements_.push_back({canonicalSign(m), m.det(), 1});
  g.finish();
  return g;
}

int IcosaGroup::indexOf(const Mat2& m) const {
  const Mat2 u = m.unimodular();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (sameProjective(elements_[i].matrix, u, 1e-7)) return static_cast<int>(i);
  return -1;
}

void IcosaGroup::finish() {
  const std::size_t n = elements_.size();
  table_.assign(n, std::vector<int>(n, -1));
  inverse_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      table_[i][j] = indexOf(elements_[i].matrix * elements_[j].matrix);
      if (table_[i][j] == 0) inverse_[i] = static_cast<int>(j);
    }
  for (std::size_t i = 0; i < n; ++i) {
    int k = 1;
    for (int p = static_cast<int>(i); p != 0 && k <= static_cast<int>(n); p = table_[p][i]) ++k;
    elements_[i].order = k;
  }

  mirrors_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].order != 2) continue;
    // Fixed points of the half-turn are the eigenvectors of its matrix.
    const Mat2& m = elements_[i].matrix;
    const Complex tr = m.a + m.d;
    const Complex lambda = (tr + std::sqrt(tr * tr - 4.0 * m.det())) / 2.0;
    const ProjectivePoint fixed = std::abs(m.b) > std::abs(m.c)
                                      ? ProjectivePoint(m.b, lambda - m.a)
                                      : ProjectivePoint(lambda - m.d, m.c);
    const Vec3 normal = fixed.toSphere();
    mirrors_.push_back({normal, static_cast<int>(i), chartCircle(normal)});
    if (std::abs(normal[0]) < 1e-9 && std::abs(normal[2]) < 1e-9)
      realMirror_ = static_cast<int>(mirrors_.size()) - 1;
  }
}

std::map<int, int> IcosaGroup::orderCensus() const {
  std::map<int, int> census;
  for (const auto& e : elements_) ++census[e.order];
  return census;
}

ProjectivePoint IcosaGroup::reflect(const Mirror& m, const ProjectivePoint& p) const {
  return antipode(apply(m.involution, p));
}

std::vector<int> IcosaGroup::mirrorsContaining(const ProjectivePoint& p, double tol) const {
  std::vector<int> out;
  const Vec3 v = p.toSphere();
  for (std::size_t i = 0; i < mirrors_.size(); ++i)
    if (std::abs(dot(v, mirrors_[i].normal)) < tol) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> IcosaGroup::mirrorContaining(const ProjectivePoint& p, double tol) const {
  const auto all = mirrorsContaining(p, tol);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<int> IcosaGroup::stabilizerOfRealAxis() const {
  std::vector<int> out;
  const std::vector<ProjectivePoint> probes{ProjectivePoint::affine(0.3),
                                            ProjectivePoint::affine(-1.7),
                                            ProjectivePoint::affine(4.1)};
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    bool keeps = true;
    for (const auto& p : probes) keeps = keeps && std::abs(apply(i, p).toSphere()[1]) < 1e-9;
    if (keeps) out.push_back(static_cast<int>(i));
  }
  return out;
}

Orbit IcosaGroup::orbitOf(const ProjectivePoint& p, double tol) const {
  Orbit o;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const ProjectivePoint q = apply(i, p);
    if (!o.find(q, tol)) o.points.push_back(q);
  }
  switch (o.size()) {
    case 12: o.label = OrbitLabel::Vertex; break;
    case 20: o.label = OrbitLabel::Face; break;
    case 30: o.label = OrbitLabel::Edge; break;
    case 60: o.label = OrbitLabel::Generic; break;
    default: o.label = OrbitLabel::Other; break;
  }
  return o;
}

const IcosaGroup& icosaGroup() {
  static const IcosaGroup g = IcosaGroup::build();
  return g;
}

std::vector<PrintedVertex> printedVertexFormulas() {
  const double s5 = std::sqrt(5.0);
  const Complex i(0.0, 1.0);
  std::vector<PrintedVertex> out;
  out.push_back({"(1+sqrt5)/2", (1.0 + s5) / 2.0});
  out.push_back({"(1-sqrt5)/2", (1.0 - s5) / 2.0});
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0}) {
      const std::string tag = std::string(a > 0 ? "+" : "-") + "i, " + (b > 0 ? "+" : "-") + "sqrt5";
      out.push_back({"(-5+sqrt5 " + tag + ") / 2(+-sqrt5-5)",
                     (-5.0 + s5 + a * i * std::sqrt(10.0 * (5.0 + s5))) / (2.0 * (b * s5 - 5.0))});
      out.push_back({"(2(5+sqrt5) " + tag + ") / 4(5+-sqrt5)",
                     (2.0 * (5.0 + s5) + a * i * (5.0 - s5) * std::sqrt(2.0 * (5.0 + s5))) /
                         (4.0 * (5.0 + b * s5))});
    }
  return out;
}

SpecialOrbits specialOrbits(const IcosaGroup& group) {
  const auto& ci = canonicalInvariants();
  SpecialOrbits s;
  s.vertices = orbitFromAffineRoots(group, ci.F, true);
  s.faces = orbitFromAffineRoots(group, ci.H, false);
  s.edges = orbitFromAffineRoots(group, ci.T, false);
  return s;
}

const SpecialOrbits& icosaSpecialOrbits() {
  static const SpecialOrbits s = specialOrbits(icosaGroup());
  return s;
}

}  // namespace icosa
