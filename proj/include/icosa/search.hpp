#pragma once

// Search for 31-maps whose critical set is a 60-point orbit of antipodally
// exchanged 2-periodic points: the residual M(z, zbar), its restriction to the
// real axis, the two special maps, and Newton basins for (R, S).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icosa/equivariants.hpp"
#include "icosa/poly.hpp"

namespace icosa {

/// sum_k byW[k](z) w^k with w standing for zbar as an independent variable.
struct ZWPolynomial {
  std::array<UPoly, 3> byW;

  Rational coefficient(int zExp, int wExp) const;
  template <class T>
  T evaluate(const T& z, const T& w) const {
    T acc(0);
    for (int k = 2; k >= 0; --k) acc = acc * w + icosa::evaluate(byW[k], z);
    return acc;
  }
  friend bool operator==(const ZWPolynomial& a, const ZWPolynomial& b) { return a.byW == b.byW; }
};

struct ResidualPolynomial {
  ZWPolynomial M;
  // M(u + i v, u - i v) = R(u, v) + i S(u, v); keys are (u exponent, v exponent).
  std::map<std::pair<int, int>, Rational> R, S;

  static ResidualPolynomial from(const ZWPolynomial& m);
  double evaluateR(double u, double v) const;
  double evaluateS(double u, double v) const;
};

/// The residual exactly as printed, trailing constant included.
const ResidualPolynomial& printedResidual();

/// J / (F H T) from the symbolic pipeline, with (a, b) the cleared-denominator
/// solution of f(z, 1) = (1, -w).
const ZWPolynomial& pipelineQuotient();

struct ResidualReconciliation {
  Rational scalar;  // pipelineQuotient = scalar * computed M
  ResidualPolynomial computed;  // normalized so the z^60 w coefficient is 1
  struct Difference {
    int zExp, wExp;
    Rational printed, computed;
  };
  std::vector<Difference> differences;  // printed vs computed, term by term
};
const ResidualReconciliation& reconcileResidual();

/// The product of the printed real-restriction factors.
UPoly printedRealRestriction();
std::vector<UPoly> printedRealRestrictionFactors();
/// P(z) = M(z, z).
UPoly realRestriction(const ZWPolynomial& m);

/// Solution of a H phi(z,1) + b F eta(z,1) = (1, -w).  Throws SingularSystem.
MapFamilyCoefficients solveCoefficients(Complex z, Complex w, double tol = 1e-12);
inline MapFamilyCoefficients solveCoefficients(Complex z) { return solveCoefficients(z, std::conj(z)); }
/// Rescales so that a = 1.
MapFamilyCoefficients normalizedCoefficients(const MapFamilyCoefficients& c);

/// J(z, w) / (F H T)(z) evaluated numerically from the adjugate (a, b).  Throws
/// DivisionNearZero when F H T is below tol relative to the chart scale.
Complex criticalResidual(Complex z, Complex w, double tol = 1e-10);
Complex50 criticalResidual50(const Complex50& z, const Complex50& w);

enum class RootKind { Vertex, Face, Edge, New };
std::string kindName(RootKind k);

struct RealRoot {
  Real50 value;
  RootKind kind = RootKind::New;
};

struct RootCensus {
  std::vector<Complex50> roots;  // all 61
  std::vector<RealRoot> real;    // ascending
  std::map<RootKind, int> counts;
  std::vector<double> newRoots() const;
};

/// Roots of the computed real restriction.  Throws RootCountMismatch unless there
/// are 61 roots of which 19 are real.
const RootCensus& realRestrictionRoots();
RootCensus censusOf(const UPoly& restriction);
/// Throws RootCountMismatch unless the census is 61 roots, 19 real.
void requireExpectedCensus(const RootCensus& c);

enum class Polyhedron { Soccer, DualSoccer };
std::string polyhedronName(Polyhedron p);

/// Requires a 60-point orbit (std::invalid_argument).  Throws Unclassifiable.
Polyhedron classifyPolyhedron(const Orbit& o, double tol = 1e-8);

struct SpecialMapSolution {
  std::vector<double> slice;  // the four real points of the orbit
  Orbit orbit;
  MapFamilyCoefficients coefficients;  // a = 1
  NumericMap map;
  Polyhedron label;
};

/// Two solutions, soccer first.  Throws OrbitSizeError.
std::pair<SpecialMapSolution, SpecialMapSolution> buildSpecialMaps();
const std::pair<SpecialMapSolution, SpecialMapSolution>& specialMaps();

/// A coefficient of a printed approximate map; tol is one unit in the last printed place.
struct PrintedCoefficient {
  int component;  // 0 or 1
  int xExp;
  std::string text;
  double value;
  double tol;
};
struct PrintedMap {
  std::string name;
  std::string bText;
  double b;
  double bTol;
  std::vector<PrintedCoefficient> coefficients;
};
PrintedMap printedG();
PrintedMap printedH();
/// The map divided by its x^31 coefficient.
NumericMap monicMap(const NumericMap& m);

// Newton's method for (R, S) = 0 on the real plane.

enum NewtonClass : std::int8_t { kNone = -1, kVertex = 0, kFace = 1, kEdge = 2, kSoccer = 3, kDualSoccer = 4 };

struct NewtonOutcome {
  int cls = kNone;
  int iterations = 0;
};

class NewtonSystem {
 public:
  NewtonSystem();
  NewtonOutcome run(Complex z0, int maxIter = 200) const;
  /// The classified known orbits, indexed by NewtonClass.
  const std::array<Orbit, 5>& targets() const { return targets_; }

 private:
  void evaluate(Complex z, Complex& m, Complex& mz, Complex& mw) const;
  int classify(Complex z) const;

  std::array<std::vector<Complex>, 3> m_, dm_;
  std::array<Orbit, 5> targets_;
};

/// Vertex 0, vertex (1 - sqrt 5)/2 and their shared face-center in the upper half-plane.
std::array<Complex, 3> fundamentalTriangle();

struct NewtonRaster {
  int rows = 0;  // triangle side; cells = rows (rows - 1) / 2
  std::vector<Complex> centers;
  std::vector<std::int8_t> cls;
  std::vector<std::int16_t> iterations;
  std::array<std::size_t, 5> counts{};
  std::size_t converged() const;
  double convergedFraction() const { return cells() ? double(converged()) / double(cells()) : 0.0; }
  std::size_t cells() const { return cls.size(); }
};

NewtonRaster newtonBasins(int rows, int maxIter = 200, int threads = 1);

}  // namespace icosa
