#include "icosa/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "icosa/errors.hpp"

namespace icosa {

std::vector<Complex> companionRoots(const std::vector<Complex>& ascending) {
  std::vector<Complex> c = ascending;
  while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
  if (c.size() < 2) return {};
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw RootFindingFailure("companion eigenvalues failed");
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return roots;
}

Complex50 evaluatePolynomial(const std::vector<Real50>& ascending, const Complex50& z) {
  Complex50 acc(0);
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * z + Complex50(*it);
  return acc;
}

namespace {

struct Poly50 {
  std::vector<Real50> c, dc;

  explicit Poly50(const std::vector<Rational>& q) {
    for (const auto& v : q) c.push_back(toReal50(v));
    for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(c[k] * static_cast<int>(k));
  }
  Complex50 value(const Complex50& z) const { return evaluatePolynomial(c, z); }
  Complex50 slope(const Complex50& z) const { return evaluatePolynomial(dc, z); }
};

Real50 magnitude(const Complex50& z) { return abs(z); }

bool newtonPolish(const Poly50& p, Complex50& z, const Real50& eps) {
  for (int it = 0; it < 200; ++it) {
    const Complex50 d = p.slope(z);
    if (magnitude(d) == 0) return false;
    const Complex50 step = p.value(z) / d;
    z -= step;
    if (magnitude(step) <= eps * std::max(Real50(1), magnitude(z))) return true;
  }
  return false;
}

// Simultaneous Aberth correction, used when independent Newton runs collide.
bool aberthPolish(const Poly50& p, std::vector<Complex50>& zs, const Real50& eps) {
  for (int it = 0; it < 500; ++it) {
    Real50 worst = 0;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const Complex50 ratio = p.value(zs[k]) / p.slope(zs[k]);
      Complex50 repulse(0);
      for (std::size_t j = 0; j < zs.size(); ++j)
        if (j != k) repulse += Complex50(1) / (zs[k] - zs[j]);
      const Complex50 step = ratio / (Complex50(1) - ratio * repulse);
      zs[k] -= step;
      worst = std::max(worst, magnitude(step) / std::max(Real50(1), magnitude(zs[k])));
    }
    if (worst <= eps) return true;
  }
  return false;
}

}  // namespace

std::vector<Complex50> polishedRoots(const std::vector<Rational>& ascending, int digits) {
  std::vector<Rational> q = ascending;
  while (!q.empty() && sgn(q.back()) == 0) q.pop_back();
  if (q.empty()) throw RootFindingFailure("zero polynomial");
  std::vector<Complex50> roots;
  std::size_t zeros = 0;
  while (zeros < q.size() && sgn(q[zeros]) == 0) ++zeros;
  roots.assign(zeros, Complex50(0));
  q.erase(q.begin(), q.begin() + static_cast<long>(zeros));
  if (q.size() < 2) return roots;

  std::vector<Complex> approx;
  for (const auto& v : q) approx.emplace_back(v.get_d());
  const auto seeds = companionRoots(approx);

  const Poly50 p(q);
  const Real50 eps = pow(Real50(10), -digits);
  std::vector<Complex50> found;
  bool ok = true;
  for (const auto& s : seeds) {
    Complex50 z(Real50(s.real()), Real50(s.imag()));
    ok = newtonPolish(p, z, eps) && ok;
    found.push_back(z);
  }
  auto collided = [&] {
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = i + 1; j < found.size(); ++j)
        if (magnitude(found[i] - found[j]) <=
            Real50(1e-20) * std::max(Real50(1), magnitude(found[i])))
          return true;
    return false;
  };
  if (!ok || collided()) {
    found.clear();
    for (const auto& s : seeds) found.emplace_back(Real50(s.real()), Real50(s.imag()));
    if (!aberthPolish(p, found, eps) || collided())
      throw RootFindingFailure("root polishing did not separate all roots");
  }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace icosa
