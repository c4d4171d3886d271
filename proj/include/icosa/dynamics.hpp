#pragma once

// Iteration of equivariant maps: critical 2-cycles, convergence, the repelling
// real fixed point of g^2 between two pentagon vertices, segment trajectories
// and local degree.

#include <optional>
#include <string>
#include <vector>

#include "icosa/equivariants.hpp"
#include "icosa/search.hpp"

namespace icosa {

struct TwoCycle {
  ProjectivePoint p, q;  // q = antipode(p) = m(p)
  int pIndex = -1, qIndex = -1;  // positions in the critical orbit
};

/// A map together with the orbit whose antipodal pairs are its attracting 2-cycles.
struct MapDynamics {
  std::string name;
  CompiledMap map;
  Orbit critical;
  std::vector<TwoCycle> cycles;
  std::vector<int> cycleOf;  // orbit index -> cycle index
};

/// Pairs each orbit point with its antipode.  Throws OrbitSizeError if some
/// antipode is missing.
MapDynamics makeDynamics(const std::string& name, const CompiledMap& m, const Orbit& critical);
/// name is one of g, h, phi, eta.  Throws std::invalid_argument otherwise.
const MapDynamics& dynamicsFor(const std::string& name);

ProjectivePoint iterate(const CompiledMap& m, ProjectivePoint p, int n);

struct TrajectoryResult {
  std::optional<TwoCycle> limit;
  int cycle = -1;   // index into MapDynamics::cycles
  int landed = -1;  // orbit index of the even-step limit
  int iterations = 0;
  ProjectivePoint last;
  std::vector<ProjectivePoint> history;
};

struct ConvergeOptions {
  int maxIter = 400;
  double tol = 1e-12;
  double snap = 1e-6;
  bool keepHistory = false;
};

/// Iterates until successive even-step iterates agree within tol, then snaps to
/// a known cycle within the snapping distance.  A stall away from every known
/// cycle, or running out of iterations, gives no limit.
TrajectoryResult convergeToCycle(const MapDynamics& d, const ProjectivePoint& p0, const ConvergeOptions& o = {});

struct EdgeAnchor {
  double z = 0;           // real fixed point of g^2
  double residual = 0;    // |g^2(z) - z|
  double image = 0;       // g(z)
  double multiplier = 0;  // (g^2)'(z)
  Complex X, Y;           // the pentagon vertices on either side, Im X > 0
};

/// Throws NotFound if g^2 - id has no sign change between the pentagon vertices.
EdgeAnchor findEdgeAnchor(const MapDynamics& g);

struct SegmentTrajectory {
  std::vector<std::vector<Complex>> images;  // g^0 .. g^k of the sampled segment
  Complex upperLimit, lowerLimit;            // limits of the two endpoints under g^2
  int upperSteps = -1, lowerSteps = -1;      // even iterates until within 1e-10
};

/// The vertical segment of half-length h through z, sampled geometrically toward z.
SegmentTrajectory segmentTrajectory(const MapDynamics& g, double z, double halfLength, int k, int samples = 400);

/// Circle through three points; center and radius.
struct Circle {
  Complex center;
  double radius;
};
Circle circleThrough(Complex a, Complex b, Complex c);

/// Symmetric Hausdorff distance between the even images of the segment and the
/// arc of the circle through X, z, Y that contains z.
double hausdorffToArc(const SegmentTrajectory& s, const EdgeAnchor& e);

/// Local degree of m at p from the log-log slope of chordal displacement over
/// radii 1e-3 .. 1e-6 in 50-digit arithmetic.  Throws Inconclusive when the
/// slope is not within 0.05 of an integer or the fit residual exceeds 0.05.
int localDegree(const NumericMap& m, const ProjectivePoint& p, double* slope = nullptr);

/// Angles (radians, in [0, pi]) between the outward mirror direction and the two
/// pentagon-hexagon edges at the vertex X, and between those two edges.
struct Trisection {
  double mirrorToUpper, mirrorToLower, between;
};
Trisection vertexTrisection(const MapDynamics& g, const EdgeAnchor& e);

}  // namespace icosa
