#pragma once

// The rotational icosahedral action on the Riemann sphere, generated numerically
// from a 1/5-turn about 0 and a half-turn about a real edge-midpoint, together
// with its antiholomorphic extension (antipodal map and the 15 mirrors).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icosa/sphere.hpp"

namespace icosa {

struct GroupElement {
  Mat2 matrix;  // determinant-one lift
  Complex determinant;
  int order = 1;
};

enum class OrbitLabel { Vertex, Face, Edge, Generic, Other };

std::string labelName(OrbitLabel label);

struct Orbit {
  std::vector<ProjectivePoint> points;
  OrbitLabel label = OrbitLabel::Other;

  std::size_t size() const { return points.size(); }
  /// Index of the point within tol (chordal), if any.
  std::optional<std::size_t> find(const ProjectivePoint& p, double tol) const;
};

/// Great circle in the affine chart: a line through the origin when it passes
/// through infinity, a circle otherwise.
struct ChartCircle {
  bool isLine = false;
  Complex center;     // circle center, or a unit direction for lines
  double radius = 0;  // circle radius; unused for lines
};

struct Mirror {
  Vec3 normal;     // unit normal of the great circle on the sphere
  int involution;  // index of the half-turn A whose alpha*A fixes this circle
  ChartCircle chart;
};

class IcosaGroup {
 public:
  static constexpr double kDefaultTol = 1e-10;

  /// Closure from the two generators.  Throws ClosureOverflow past 120 elements.
  static IcosaGroup build(double tol = kDefaultTol);
  /// Closure from arbitrary generators (exposed for testing bad generators).
  static IcosaGroup fromGenerators(const std::vector<Mat2>& generators, double tol = kDefaultTol);

  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  ProjectivePoint apply(std::size_t i, const ProjectivePoint& p) const {
    return elements_[i].matrix.apply(p);
  }

  int multiply(int i, int j) const { return table_[i][j]; }
  int inverse(int i) const { return inverse_[i]; }
  /// Index of the projective element equal to m, or -1.
  int indexOf(const Mat2& m) const;
  std::map<int, int> orderCensus() const;

  const std::vector<Mirror>& mirrors() const { return mirrors_; }
  int realAxisMirror() const { return realMirror_; }
  /// alpha * A for the mirror's involution A: reflection through the mirror.
  ProjectivePoint reflect(const Mirror& m, const ProjectivePoint& p) const;
  std::optional<int> mirrorContaining(const ProjectivePoint& p, double tol = 1e-8) const;
  std::vector<int> mirrorsContaining(const ProjectivePoint& p, double tol = 1e-8) const;
  /// Elements mapping the real axis to itself.
  std::vector<int> stabilizerOfRealAxis() const;

  /// Applies all elements and deduplicates within tol (chordal).
  Orbit orbitOf(const ProjectivePoint& p, double tol = 1e-9) const;

 private:
  void finish();

  double tol_ = kDefaultTol;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<Mirror> mirrors_;
  int realMirror_ = -1;
};

inline IcosaGroup buildGroup() { return IcosaGroup::build(); }

/// Shared immutable instance.
const IcosaGroup& icosaGroup();

/// The half-turn generator's axis: midpoint of the edge from 0 to (1 - sqrt 5)/2.
ProjectivePoint realEdgeMidpoint();

/// The ten finite nonzero vertices as printed, every sign choice taken
/// independently (8 values from the radical formulas plus (1 +- sqrt 5)/2).
struct PrintedVertex {
  std::string formula;
  Complex value;
};
std::vector<PrintedVertex> printedVertexFormulas();

struct SpecialOrbits {
  Orbit vertices;  // roots of F, including infinity
  Orbit faces;     // roots of H
  Orbit edges;     // roots of T
};

/// Root-finds F, H, T in the affine chart and cross-validates each root set as
/// a single group orbit.  Throws RootFindingFailure.
SpecialOrbits specialOrbits(const IcosaGroup& group);
const SpecialOrbits& icosaSpecialOrbits();

}  // namespace icosa
