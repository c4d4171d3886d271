#pragma once

// The five tetrahedral subgroups, their quadruples of face centers, the quintic
// with roots T_a(z), the icosahedral function F^5 / H^3, and the labelling of a
// 60-point orbit by tetrahedral subgroup.

#include <array>
#include <random>
#include <vector>

#include "icosa/dynamics.hpp"

namespace icosa {

struct TetrahedralSystem {
  std::array<std::vector<int>, 5> subgroups;  // element indices, 12 each
  std::array<std::array<int, 4>, 5> tetrahedra;  // indices into the face orbit
  std::array<std::array<ProjectivePoint, 4>, 5> points;
  bool flipped = false;
  /// Index of the face center of smallest principal argument.
  int reference = -1;

  /// Coefficients of T_a(z) = prod (z - t_ak), ascending.
  std::array<Complex, 5> form(int a) const;
  Complex evaluate(int a, Complex z) const;
  /// Subgroup containing group element k, -1 for none (the element is then of order 5 or 1).
  int subgroupOf(int k) const;
};

/// Every order-12 subgroup, found by closing pairs of an involution and an order-3 element.
std::vector<std::vector<int>> tetrahedralSubgroups(const IcosaGroup& g);

/// Of the two partitions of the face centers into one 4-point orbit per subgroup,
/// the default puts the reference face in the quadruple of the lower-numbered of
/// the two subgroups that hold it; flip takes the other.  Throws PartitionFailure.
TetrahedralSystem buildTetrahedralSystem(bool flip = false);
const TetrahedralSystem& tetrahedralSystem();

/// Permutation of the five quadruples (or five subgroups) induced by element k.
std::array<int, 5> inducedPermutation(const TetrahedralSystem& ts, int k);
bool isEven(const std::array<int, 5>& perm);

struct ResolventQuintic {
  Complex z;
  std::array<Complex, 5> roots;  // T_a(z)
  std::array<Complex, 6> a;      // prod (s - T_a) = sum a_k s^(5-k), a_0 = 1
  Complex F, H;
  Complex icosaParameter;  // F^5 / H^3
  /// |a_k| / max|T_a|^k.
  double relative(int k) const;
};

ResolventQuintic resolventAt(Complex z, const TetrahedralSystem& ts = tetrahedralSystem());

Complex icosahedralFunction(Complex z);

struct ResolventFit {
  int samples = 0;
  Complex b, c;  // mean of a_3 / F and a_5 / H
  double bSpread = 0, cSpread = 0;  // max |ratio - mean| / |mean|
  std::array<double, 6> worstRelative{};  // worst |a_k| / max|T|^k over the samples
  double rootMismatch = 0;  // reduced quintic roots vs T_a F^3 / H^2, relative
};

/// Samples z from a standard complex normal.
ResolventFit fitResolvent(int samples, std::mt19937_64& rng, const TetrahedralSystem& ts = tetrahedralSystem());

/// Roots of s^5 + b Z^2 s^2 + c Z^3.
std::vector<Complex> reducedQuinticRoots(Complex b, Complex c, Complex Z);

/// Largest distance between two 5-element multisets under the best matching,
/// divided by the largest modulus.
double multisetMismatch(const std::vector<Complex>& x, const std::vector<Complex>& y);

/// Label 1..5 of each point: the subgroup holding the half-turn that sends the
/// point to its antipode.  Throws PartitionFailure unless the orbit has 60
/// points, each on a mirror, falling into five orbits of 12.
std::vector<int> tauDecomposition(const Orbit& o, const TetrahedralSystem& ts = tetrahedralSystem());

struct DemoReport {
  ProjectivePoint seed;
  int iterations = 0;
  int limit = -1, partner = -1;  // orbit indices of w_inf and g(w_inf)
  int label = 0, partnerLabel = 0;
  std::vector<ProjectivePoint> tau;  // the 12 points sharing the label
  bool consistent() const { return label == partnerLabel; }
};

/// Iterates g from the seed.  Throws NonConvergence.
DemoReport symmetryBreakingDemo(const ProjectivePoint& seed, int maxIter = 400);

struct DemoStatistics {
  int seeds = 0, converged = 0, consistent = 0;
  std::array<int, 5> byLabel{};
};
DemoStatistics symmetryBreakingStatistics(int seeds, std::uint64_t seed, int threads = 1);

}  // namespace icosa
