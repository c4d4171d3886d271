#include "icosa/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "icosa/errors.hpp"
#include "icosa/parallel.hpp"
#include "icosa/roots.hpp"

namespace icosa {

namespace {

std::vector<int> closure(const IcosaGroup& g, const std::vector<int>& gens) {
  std::set<int> seen{0};
  for (int x : gens) seen.insert(x);
  std::vector<int> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int y : gens)
        if (seen.insert(g.multiply(x, y)).second) next.push_back(g.multiply(x, y));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Orbit of a face index under a set of elements, as sorted face indices.
std::vector<int> faceOrbit(const IcosaGroup& g, const Orbit& faces, const std::vector<int>& sub, int f) {
  std::set<int> out;
  for (int k : sub) {
    const auto idx = faces.find(g.apply(k, faces.points[f]), 1e-8);
    if (!idx) throw PartitionFailure("face center image not found");
    out.insert(int(*idx));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<std::vector<int>> tetrahedralSubgroups(const IcosaGroup& g) {
  std::vector<int> twos, threes;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k].order == 2) twos.push_back(int(k));
    if (g[k].order == 3) threes.push_back(int(k));
  }
  std::set<std::vector<int>> found;
  for (int a : twos)
    for (int b : threes) {
      auto s = closure(g, {a, b});
      if (s.size() == 12) found.insert(std::move(s));
    }
  return {found.begin(), found.end()};
}

std::array<Complex, 5> TetrahedralSystem::form(int a) const {
  std::array<Complex, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};  // built descending, reversed below
  int deg = 0;
  for (const auto& p : points[a]) {
    const Complex t = p.toAffine();
    for (int k = ++deg; k >= 1; --k) c[k] -= t * c[k - 1];
  }
  std::reverse(c.begin(), c.end());
  return c;
}

Complex TetrahedralSystem::evaluate(int a, Complex z) const {
  Complex v = 1.0;
  for (const auto& p : points[a]) v *= z - p.toAffine();
  return v;
}

int TetrahedralSystem::subgroupOf(int k) const {
  for (int a = 0; a < 5; ++a)
    if (std::binary_search(subgroups[a].begin(), subgroups[a].end(), k)) return a;
  return -1;
}

TetrahedralSystem buildTetrahedralSystem(bool flip) {
  const IcosaGroup& g = icosaGroup();
  const Orbit& faces = icosaSpecialOrbits().faces;
  if (faces.size() != 20) throw PartitionFailure("face orbit does not have 20 points");
  const auto subs = tetrahedralSubgroups(g);
  if (subs.size() != 5) throw PartitionFailure("found " + std::to_string(subs.size()) + " order-12 subgroups");

  std::array<std::vector<std::vector<int>>, 5> quads;
  for (int a = 0; a < 5; ++a) {
    std::set<std::vector<int>> orbits;
    for (int f = 0; f < 20; ++f) orbits.insert(faceOrbit(g, faces, subs[a], f));
    for (const auto& o : orbits)
      if (o.size() == 4) quads[a].push_back(o);
    if (quads[a].size() != 2) throw PartitionFailure("subgroup without two 4-point face orbits");
  }

  std::vector<std::array<int, 5>> systems;  // choice of quadruple per subgroup
  for (int mask = 0; mask < 32; ++mask) {
    std::array<int, 5> choice;
    std::vector<int> cover;
    for (int a = 0; a < 5; ++a) {
      choice[a] = (mask >> a) & 1;
      const auto& q = quads[a][choice[a]];
      cover.insert(cover.end(), q.begin(), q.end());
    }
    std::sort(cover.begin(), cover.end());
    if (std::adjacent_find(cover.begin(), cover.end()) == cover.end()) systems.push_back(choice);
  }
  if (systems.size() != 2) throw PartitionFailure("expected two chiral systems, found " + std::to_string(systems.size()));

  TetrahedralSystem ts;
  ts.flipped = flip;
  double bestArg = 10;
  for (int f = 0; f < 20; ++f) {
    const double a = std::arg(faces.points[f].toAffine());
    if (a < bestArg - 1e-12) bestArg = a, ts.reference = f;
  }
  auto holder = [&](const std::array<int, 5>& choice) {
    for (int a = 0; a < 5; ++a) {
      const auto& q = quads[a][choice[a]];
      if (std::find(q.begin(), q.end(), ts.reference) != q.end()) return a;
    }
    return -1;
  };
  const int h0 = holder(systems[0]), h1 = holder(systems[1]);
  if (h0 == h1) throw PartitionFailure("reference face does not separate the two systems");
  const auto& chosen = (h0 < h1) != flip ? systems[0] : systems[1];
  for (int a = 0; a < 5; ++a) {
    ts.subgroups[a] = subs[a];
    const auto& q = quads[a][chosen[a]];
    for (int k = 0; k < 4; ++k) {
      ts.tetrahedra[a][k] = q[k];
      ts.points[a][k] = faces.points[q[k]];
    }
  }
  return ts;
}

const TetrahedralSystem& tetrahedralSystem() {
  static const TetrahedralSystem ts = buildTetrahedralSystem();
  return ts;
}

std::array<int, 5> inducedPermutation(const TetrahedralSystem& ts, int k) {
  const IcosaGroup& g = icosaGroup();
  std::array<int, 5> perm{};
  for (int a = 0; a < 5; ++a) {
    const ProjectivePoint image = g.apply(k, ts.points[a][0]);
    perm[a] = -1;
    for (int b = 0; b < 5 && perm[a] < 0; ++b)
      for (const auto& p : ts.points[b])
        if (chordal(p, image) < 1e-8) perm[a] = b;
    if (perm[a] < 0) throw PartitionFailure("element does not preserve the tetrahedral system");
  }
  return perm;
}

bool isEven(const std::array<int, 5>& perm) {
  int inversions = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) inversions += perm[i] > perm[j];
  return inversions % 2 == 0;
}

double ResolventQuintic::relative(int k) const {
  double m = 0;
  for (const Complex& t : roots) m = std::max(m, std::abs(t));
  return std::abs(a[k]) / std::pow(m, k);
}

namespace {

Complex affineF(Complex z) { return canonicalInvariants().F.convert<Complex>().evaluate(z, Complex(1)); }
Complex affineH(Complex z) { return canonicalInvariants().H.convert<Complex>().evaluate(z, Complex(1)); }

}  // namespace

Complex icosahedralFunction(Complex z) { return std::pow(affineF(z), 5) / std::pow(affineH(z), 3); }

ResolventQuintic resolventAt(Complex z, const TetrahedralSystem& ts) {
  ResolventQuintic r;
  r.z = z;
  std::array<Complex, 6> e{1.0, 0.0, 0.0, 0.0, 0.0, 0.0};  // elementary symmetric functions
  for (int a = 0; a < 5; ++a) {
    r.roots[a] = ts.evaluate(a, z);
    for (int k = a + 1; k >= 1; --k) e[k] += r.roots[a] * e[k - 1];
  }
  for (int k = 0; k <= 5; ++k) r.a[k] = k % 2 ? -e[k] : e[k];
  r.F = affineF(z);
  r.H = affineH(z);
  r.icosaParameter = std::pow(r.F, 5) / std::pow(r.H, 3);
  return r;
}

std::vector<Complex> reducedQuinticRoots(Complex b, Complex c, Complex Z) {
  return companionRoots({c * Z * Z * Z, 0.0, b * Z * Z, 0.0, 0.0, 1.0});
}

double multisetMismatch(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("multisets differ in size");
  std::vector<int> idx(y.size());
  std::iota(idx.begin(), idx.end(), 0);
  double scale = 0;
  for (const auto& v : y) scale = std::max(scale, std::abs(v));
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[idx[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return scale > 0 ? best / scale : best;
}

ResolventFit fitResolvent(int samples, std::mt19937_64& rng, const TetrahedralSystem& ts) {
  std::normal_distribution<double> n;
  ResolventFit fit;
  fit.samples = samples;
  std::vector<ResolventQuintic> rs;
  std::vector<Complex> bs, cs;
  for (int i = 0; i < samples; ++i) {
    rs.push_back(resolventAt(Complex(n(rng), n(rng)), ts));
    bs.push_back(rs.back().a[3] / rs.back().F);
    cs.push_back(rs.back().a[5] / rs.back().H);
    for (int k = 1; k <= 5; ++k) fit.worstRelative[k] = std::max(fit.worstRelative[k], rs.back().relative(k));
  }
  auto meanSpread = [](const std::vector<Complex>& v, Complex& mean, double& spread) {
    mean = std::accumulate(v.begin(), v.end(), Complex(0)) / double(v.size());
    spread = 0;
    for (const auto& x : v) spread = std::max(spread, std::abs(x - mean) / std::abs(mean));
  };
  meanSpread(bs, fit.b, fit.bSpread);
  meanSpread(cs, fit.c, fit.cSpread);
  for (const auto& r : rs) {
    const Complex scale = std::pow(r.F, 3) / (r.H * r.H);
    std::vector<Complex> expected;
    for (const auto& t : r.roots) expected.push_back(t * scale);
    fit.rootMismatch = std::max(fit.rootMismatch, multisetMismatch(reducedQuinticRoots(fit.b, fit.c, r.icosaParameter), expected));
  }
  return fit;
}

std::vector<int> tauDecomposition(const Orbit& o, const TetrahedralSystem& ts) {
  if (o.size() != 60) throw PartitionFailure("tau decomposition needs a 60-point orbit, got " + std::to_string(o.size()));
  const IcosaGroup& g = icosaGroup();
  std::vector<int> labels(60, 0);
  for (std::size_t i = 0; i < 60; ++i) {
    const ProjectivePoint target = antipode(o.points[i]);
    for (std::size_t k = 0; k < g.size() && !labels[i]; ++k)
      if (g[k].order == 2 && chordal(g.apply(k, o.points[i]), target) < 1e-8) labels[i] = ts.subgroupOf(int(k)) + 1;
    if (labels[i] <= 0) throw PartitionFailure("orbit point on no mirror");
  }
  for (int a = 1; a <= 5; ++a) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < 60; ++i)
      if (labels[i] == a) members.push_back(i);
    if (members.size() != 12) throw PartitionFailure("tau class of size " + std::to_string(members.size()));
    std::set<std::size_t> orbit;
    for (int k : ts.subgroups[a - 1]) {
      const auto idx = o.find(g.apply(k, o.points[members[0]]), 1e-8);
      if (!idx || labels[*idx] != a) throw PartitionFailure("tau class is not a subgroup orbit");
      orbit.insert(*idx);
    }
    if (orbit.size() != 12) throw PartitionFailure("tau class is not a single subgroup orbit");
  }
  return labels;
}

namespace {

const std::vector<int>& criticalLabels() {
  static const std::vector<int> labels = tauDecomposition(dynamicsFor("g").critical);
  return labels;
}

}  // namespace

DemoReport symmetryBreakingDemo(const ProjectivePoint& seed, int maxIter) {
  const MapDynamics& d = dynamicsFor("g");
  ConvergeOptions o;
  o.maxIter = maxIter;
  const auto r = convergeToCycle(d, seed, o);
  if (!r.limit) throw NonConvergence("no critical cycle reached after " + std::to_string(r.iterations) + " iterations");
  DemoReport rep;
  rep.seed = seed;
  rep.iterations = r.iterations;
  rep.limit = r.landed;
  rep.partner = r.landed == r.limit->pIndex ? r.limit->qIndex : r.limit->pIndex;
  const auto& labels = criticalLabels();
  rep.label = labels[rep.limit];
  rep.partnerLabel = labels[rep.partner];
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == rep.label) rep.tau.push_back(d.critical.points[i]);
  return rep;
}

DemoStatistics symmetryBreakingStatistics(int seeds, std::uint64_t seed, int threads) {
  std::vector<int> label(seeds, 0);
  std::vector<char> same(seeds, 0);
  criticalLabels();
  parallelFor(std::size_t(seeds), threads, [&](std::size_t i) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (i + 1));
    std::normal_distribution<double> n;
    const ProjectivePoint p(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    try {
      const DemoReport r = symmetryBreakingDemo(p);
      label[i] = r.label;
      same[i] = r.consistent();
    } catch (const NonConvergence&) {
    }
  });
  DemoStatistics s;
  s.seeds = seeds;
  for (int i = 0; i < seeds; ++i) {
    if (!label[i]) continue;
    ++s.converged;
    s.consistent += same[i];
    ++s.byLabel[label[i] - 1];
  }
  return s;
}

}  // namespace icosa
