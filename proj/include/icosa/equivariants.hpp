#pragma once

// Equivariant maps (pairs of forms), the cross construction, the basic
// equivariants phi and eta, and the degree-31 family a H phi + b F eta.

#include <random>
#include <string>
#include <vector>

#include "icosa/forms.hpp"
#include "icosa/group.hpp"

namespace icosa {

template <class C>
struct BasicMap {
  BasicForm<C> first;
  BasicForm<C> second;

  BasicMap() = default;
  BasicMap(BasicForm<C> f, BasicForm<C> s) : first(std::move(f)), second(std::move(s)) {
    if (first.degree() != second.degree() && !first.isZero() && !second.isZero())
      throw std::invalid_argument("BasicMap: component degrees differ");
  }

  int degree() const { return first.isZero() ? second.degree() : first.degree(); }

  template <class D>
  BasicMap<D> convert() const {
    return {first.template convert<D>(), second.template convert<D>()};
  }

  friend BasicMap operator+(const BasicMap& a, const BasicMap& b) {
    return {a.first + b.first, a.second + b.second};
  }
  friend BasicMap operator-(const BasicMap& a, const BasicMap& b) {
    return {a.first - b.first, a.second - b.second};
  }
  friend BasicMap operator*(const C& s, const BasicMap& m) { return {m.first * s, m.second * s}; }
  /// Multiplies both components by an invariant form.
  friend BasicMap operator*(const BasicForm<C>& g, const BasicMap& m) {
    return {g * m.first, g * m.second};
  }
  friend bool operator==(const BasicMap& a, const BasicMap& b) {
    return a.first == b.first && a.second == b.second;
  }
  bool isZero() const { return first.isZero() && second.isZero(); }
};

using EquivariantMap = BasicMap<Rational>;
using NumericMap = BasicMap<Complex>;

/// (G_y, -G_x).
EquivariantMap cross(const BivariateForm& g);

struct BasicEquivariants {
  EquivariantMap phi;  // -cross(F), degree 11
  EquivariantMap eta;  // -cross(H), degree 19
  EquivariantMap eps;  // identity (x, y)
};
const BasicEquivariants& basicEquivariants();

/// The two displayed expansions, transcribed verbatim.
EquivariantMap printedPhi();
EquivariantMap printedEta();

struct MapFamilyCoefficients {
  Complex a{1.0};
  Complex b{0.0};
};

/// a H phi + b F eta with complex coefficients.
NumericMap familyMap(const MapFamilyCoefficients& c);
/// Exact member of the family.
EquivariantMap familyMap(const Rational& a, const Rational& b);

/// True iff t T eps + h H phi + f F eta vanishes identically.
bool verifyModuleRelation(const Rational& t = 5, const Rational& h = 5, const Rational& f = -3);

template <class C>
BasicForm<C> criticalForm(const BasicMap<C>& m) {
  if (m.degree() == 0) return BasicForm<C>(0);
  return jacobianDet(m.first, m.second);
}

/// Dense evaluator for fast iteration.  Values are computed in whichever affine
/// chart keeps the argument inside the unit disk, so no overflow at high degree.
class CompiledMap {
 public:
  CompiledMap() = default;
  explicit CompiledMap(const NumericMap& m);
  explicit CompiledMap(const EquivariantMap& m) : CompiledMap(m.convert<Complex>()) {}

  int degree() const { return degree_; }
  ProjectivePoint operator()(const ProjectivePoint& p) const;
  /// Affine value P(z)/Q(z) and derivative; infinite values are not handled.
  void affine(Complex z, Complex& value, Complex& derivative) const;
  /// The raw homogeneous components at (x, y).
  std::pair<Complex, Complex> components(Complex x, Complex y) const;

 private:
  int degree_ = 0;
  std::vector<Complex> p_, q_;  // ascending in x; y exponent implied
};

/// Chordal distance between m(p) and its expected image; used as a projective
/// equality test that needs no chart.
double equivarianceDefect(const CompiledMap& m, const IcosaGroup& g, int samples, std::mt19937_64& rng);

struct Table1Row {
  std::string map;     // phi | eta
  std::string orbit;   // vertex | face | edge
  std::string expect;  // fixed | period-2
  double worst = 0;    // largest chordal deviation over the orbit
  bool passed = false;
};
std::vector<Table1Row> checkTable1(double tol = 1e-9);

}  // namespace icosa
