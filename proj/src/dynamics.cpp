#include "icosa/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

#include "icosa/errors.hpp"

namespace icosa {

MapDynamics makeDynamics(const std::string& name, const CompiledMap& m, const Orbit& critical) {
  MapDynamics d{name, m, critical, {}, std::vector<int>(critical.size(), -1)};
  for (std::size_t i = 0; i < critical.size(); ++i) {
    if (d.cycleOf[i] >= 0) continue;
    const auto j = critical.find(antipode(critical.points[i]), 1e-8);
    if (!j || *j == i)
      throw OrbitSizeError("critical orbit of " + name + " is not closed under the antipode");
    TwoCycle c{critical.points[i], critical.points[*j], int(i), int(*j)};
    d.cycleOf[i] = d.cycleOf[*j] = int(d.cycles.size());
    d.cycles.push_back(c);
  }
  return d;
}

const MapDynamics& dynamicsFor(const std::string& name) {
  if (name == "g") {
    static const MapDynamics g = [] {
      const auto& s = specialMaps().first;
      return makeDynamics("g", CompiledMap(s.map), s.orbit);
    }();
    return g;
  }
  if (name == "h") {
    static const MapDynamics h = [] {
      const auto& s = specialMaps().second;
      return makeDynamics("h", CompiledMap(s.map), s.orbit);
    }();
    return h;
  }
  if (name == "phi") {
    static const MapDynamics phi =
        makeDynamics("phi", CompiledMap(basicEquivariants().phi), icosaSpecialOrbits().faces);
    return phi;
  }
  if (name == "eta") {
    static const MapDynamics eta =
        makeDynamics("eta", CompiledMap(basicEquivariants().eta), icosaSpecialOrbits().vertices);
    return eta;
  }
  throw std::invalid_argument("unknown map '" + name + "' (expected g, h, phi or eta)");
}

ProjectivePoint iterate(const CompiledMap& m, ProjectivePoint p, int n) {
  for (int i = 0; i < n; ++i) p = m(p);
  return p;
}

TrajectoryResult convergeToCycle(const MapDynamics& d, const ProjectivePoint& p0, const ConvergeOptions& o) {
  TrajectoryResult r;
  r.last = p0;
  if (o.keepHistory) r.history.push_back(p0);
  auto settle = [&](const ProjectivePoint& p, int k) {
    r.iterations = k;
    r.last = p;
    const auto idx = d.critical.find(p, o.snap);
    if (!idx) return;
    r.cycle = d.cycleOf[*idx];
    r.limit = d.cycles[r.cycle];
    const TwoCycle& c = d.cycles[r.cycle];
    // the even-step limit is p itself for even k, its partner otherwise
    const int other = int(*idx) == c.pIndex ? c.qIndex : c.pIndex;
    r.landed = k % 2 == 0 ? int(*idx) : other;
  };
  if (d.critical.find(p0, o.tol)) {
    settle(p0, 0);
    return r;
  }
  ProjectivePoint back2, back1 = p0, cur = p0;
  for (int k = 1; k <= o.maxIter; ++k) {
    back2 = back1;
    back1 = cur;
    cur = d.map(cur);
    if (o.keepHistory) r.history.push_back(cur);
    if (k >= 2 && chordal(cur, back2) < o.tol) {
      settle(cur, k);
      return r;
    }
  }
  r.iterations = o.maxIter;
  r.last = cur;
  return r;
}

namespace {

Complex affineValue(const CompiledMap& m, Complex z) {
  return m(ProjectivePoint::affine(z)).toAffine();
}

}  // namespace

EdgeAnchor findEdgeAnchor(const MapDynamics& g) {
  EdgeAnchor e;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : g.critical.points) {
    if (p.isInfinity(1e-12)) continue;
    const Complex z = p.toAffine();
    if (z.real() <= 0 || z.imag() <= 0) continue;
    if (std::abs(z) < best - 1e-9 || (std::abs(z) < best + 1e-9 && z.imag() < e.X.imag())) {
      best = std::abs(z);
      e.X = z;
    }
  }
  if (!std::isfinite(best)) throw NotFound("no critical point in the first quadrant");
  e.Y = std::conj(e.X);
  auto f = [&](double x) {
    return affineValue(g.map, affineValue(g.map, Complex(x, 0))).real() - x;
  };
  double lo = 0.5 * e.X.real(), hi = std::abs(e.X);
  const double flo = f(lo), fhi = f(hi);
  if (!(flo * fhi < 0)) throw NotFound("g^2 - id does not change sign between the pentagon vertices");
  std::uintmax_t iters = 200;
  const auto [a, b] =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
  e.z = 0.5 * (a + b);
  Complex v, dv, w, dw;
  g.map.affine(e.z, v, dv);
  g.map.affine(v, w, dw);
  e.image = v.real();
  e.residual = std::abs(w - e.z);
  e.multiplier = (dv * dw).real();
  if (e.residual > 1e-12) throw NotFound("fixed point of g^2 not resolved to 1e-12");
  return e;
}

SegmentTrajectory segmentTrajectory(const MapDynamics& g, double z, double halfLength, int k, int samples) {
  SegmentTrajectory s;
  const int half = std::max(2, samples / 2);
  const double ratio = std::pow(1e-12, 1.0 / (half - 1));
  std::vector<double> t;
  for (int j = 0; j < half; ++j) t.push_back(-halfLength * std::pow(ratio, j));
  t.push_back(0.0);
  for (int j = half - 1; j >= 0; --j) t.push_back(halfLength * std::pow(ratio, j));
  std::vector<ProjectivePoint> cur;
  for (double tj : t) cur.push_back(ProjectivePoint::affine(Complex(z, tj)));
  for (int j = 0; j <= k; ++j) {
    std::vector<Complex> img;
    for (auto& p : cur) img.push_back(p.toAffine());
    s.images.push_back(std::move(img));
    for (auto& p : cur) p = g.map(p);
  }
  auto limit = [&](double t0, Complex& out, int& steps) {
    ProjectivePoint p = ProjectivePoint::affine(Complex(z, t0));
    for (int n = 1; n <= 200; ++n) {
      const ProjectivePoint q = g.map(g.map(p));
      const bool done = chordal(p, q) < 1e-10;
      p = q;
      if (done) {
        steps = n;
        break;
      }
    }
    out = p.toAffine();
  };
  limit(halfLength, s.upperLimit, s.upperSteps);
  limit(-halfLength, s.lowerLimit, s.lowerSteps);
  return s;
}

Circle circleThrough(Complex a, Complex b, Complex c) {
  const double d = 2 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) +
                        c.real() * (a.imag() - b.imag()));
  if (std::abs(d) < 1e-300) throw std::invalid_argument("collinear points");
  const double a2 = std::norm(a), b2 = std::norm(b), c2 = std::norm(c);
  const Complex center((a2 * (b.imag() - c.imag()) + b2 * (c.imag() - a.imag()) + c2 * (a.imag() - b.imag())) / d,
                       (a2 * (c.real() - b.real()) + b2 * (a.real() - c.real()) + c2 * (b.real() - a.real())) / d);
  return {center, std::abs(a - center)};
}

namespace {

double segmentDistance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

double hausdorffToArc(const SegmentTrajectory& s, const EdgeAnchor& e) {
  const Circle c = circleThrough(e.X, Complex(e.z, 0), e.Y);
  const Complex ref = Complex(e.z, 0) - c.center;
  const double span = std::max(std::abs(std::arg((e.X - c.center) / ref)), std::abs(std::arg((e.Y - c.center) / ref)));
  auto toArc = [&](Complex w) {
    const double a = std::arg((w - c.center) / ref);
    if (std::abs(a) <= span) return std::abs(std::abs(w - c.center) - c.radius);
    return std::min(std::abs(w - e.X), std::abs(w - e.Y));
  };
  double out = 0;
  for (std::size_t j = 0; j < s.images.size(); j += 2)
    for (Complex w : s.images[j]) out = std::max(out, toArc(w));
  const int n = 400;
  for (int i = 0; i <= n; ++i) {
    const double a = -span + 2 * span * i / n;
    const Complex w = c.center + ref * std::polar(1.0, a);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.images.size(); j += 2) {
      const auto& img = s.images[j];
      for (std::size_t k = 0; k + 1 < img.size(); ++k) best = std::min(best, segmentDistance(w, img[k], img[k + 1]));
    }
    out = std::max(out, best);
  }
  return out;
}

namespace {

struct Homogeneous50 {
  Complex50 x, y;
};

Homogeneous50 evaluate50(const std::vector<Complex50>& p, const std::vector<Complex50>& q, const Homogeneous50& at) {
  const int d = int(p.size()) - 1;
  Complex50 P(0), Q(0);
  if (abs(at.x) <= abs(at.y)) {
    const Complex50 u = at.x / at.y;
    for (int i = d; i >= 0; --i) {
      P = P * u + p[i];
      Q = Q * u + q[i];
    }
  } else {
    const Complex50 v = at.y / at.x;
    for (int i = 0; i <= d; ++i) {
      P = P * v + p[i];
      Q = Q * v + q[i];
    }
  }
  return {P, Q};
}

Real50 chordal50(const Homogeneous50& a, const Homogeneous50& b) {
  using boost::multiprecision::sqrt;
  const Real50 na = sqrt(norm(a.x) + norm(a.y)), nb = sqrt(norm(b.x) + norm(b.y));
  return abs(a.x * b.y - a.y * b.x) / (na * nb);
}

}  // namespace

int localDegree(const NumericMap& m, const ProjectivePoint& p, double* slopeOut) {
  const int d = m.degree();
  std::vector<Complex50> P(d + 1, Complex50(0)), Q(d + 1, Complex50(0));
  for (const auto& [i, c] : m.first.terms()) P[i] = scalar_cast<Complex50>(c);
  for (const auto& [i, c] : m.second.terms()) Q[i] = scalar_cast<Complex50>(c);
  const Homogeneous50 base{scalar_cast<Complex50>(p.x()), scalar_cast<Complex50>(p.y())};
  const Real50 n = boost::multiprecision::sqrt(norm(base.x) + norm(base.y));
  const Homogeneous50 unit{base.x / n, base.y / n};
  const Homogeneous50 normal{-conj(unit.y), conj(unit.x)};
  const Homogeneous50 image = evaluate50(P, Q, unit);

  std::vector<double> lr, ld;
  for (int k = 0; k <= 6; ++k) {
    const Real50 r = boost::multiprecision::pow(Real50(10), Real50(-3) - Real50(k) / 2);
    Real50 sum = 0;
    for (int a = 0; a < 4; ++a) {
      const double th = 0.3 + a * std::numbers::pi / 2;
      const Complex50 step = Complex50(r * Real50(std::cos(th)), r * Real50(std::sin(th)));
      const Homogeneous50 q{unit.x + step * normal.x, unit.y + step * normal.y};
      sum += chordal50(evaluate50(P, Q, q), image);
    }
    lr.push_back(static_cast<double>(log10(r)));
    ld.push_back(static_cast<double>(log10(sum / 4)));
  }
  const double mx = std::accumulate(lr.begin(), lr.end(), 0.0) / lr.size();
  const double my = std::accumulate(ld.begin(), ld.end(), 0.0) / ld.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lr.size(); ++i) {
    sxy += (lr[i] - mx) * (ld[i] - my);
    sxx += (lr[i] - mx) * (lr[i] - mx);
  }
  const double slope = sxy / sxx;
  double resid = 0;
  for (std::size_t i = 0; i < lr.size(); ++i) resid = std::max(resid, std::abs(ld[i] - (my + slope * (lr[i] - mx))));
  if (slopeOut) *slopeOut = slope;
  const double rounded = std::round(slope);
  if (!std::isfinite(slope) || !std::isfinite(resid) || std::abs(slope - rounded) > 0.05 || resid > 0.05 || rounded < 1)
    throw Inconclusive("local degree fit: slope " + std::to_string(slope) + ", residual " + std::to_string(resid));
  return int(rounded);
}

namespace {

// Mean unit direction from v of the even-image points within [rMin, rMax] of v.
Complex approachDirection(const SegmentTrajectory& s, Complex v, double rMin, double rMax) {
  Complex acc = 0;
  int count = 0;
  for (std::size_t j = 0; j < s.images.size(); j += 2)
    for (Complex w : s.images[j]) {
      const double r = std::abs(w - v);
      if (r >= rMin && r <= rMax) {
        acc += (w - v) / r;
        ++count;
      }
    }
  if (count == 0) throw NotFound("no trajectory points near the vertex");
  return acc / std::abs(acc);
}

double angleBetween(Complex a, Complex b) {
  return std::acos(std::clamp((a * std::conj(b)).real() / (std::abs(a) * std::abs(b)), -1.0, 1.0));
}

}  // namespace

Trisection vertexTrisection(const MapDynamics& g, const EdgeAnchor& e) {
  const IcosaGroup& G = icosaGroup();
  const ProjectivePoint X = ProjectivePoint::affine(e.X);
  const auto mi = G.mirrorContaining(X, 1e-8);
  if (!mi) throw NotFound("vertex X lies on no mirror");
  const ChartCircle& c = G.mirrors()[*mi].chart;
  Complex mirror = c.isLine ? c.center : Complex(0, 1) * (e.X - c.center);
  if ((mirror * std::conj(e.X)).real() < 0) mirror = -mirror;

  const SegmentTrajectory s = segmentTrajectory(g, e.z, 1e-3, 40, 800);
  const Complex upper = approachDirection(s, e.X, 1e-7, 1e-5);
  // the rotation about 0 carrying Y to X carries the edge at Y to the other edge at X
  const Complex lower = approachDirection(s, e.Y, 1e-7, 1e-5) * (e.X / e.Y);
  return {angleBetween(mirror, upper), angleBetween(mirror, lower), angleBetween(upper, lower)};
}

}  // namespace icosa
