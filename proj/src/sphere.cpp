#include "icosa/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace icosa {

ProjectivePoint::ProjectivePoint(Complex x, Complex y) {
  const double s = std::max(std::abs(x), std::abs(y));
  if (!(s > 0.0) || !std::isfinite(s)) {
    x_ = x;
    y_ = y;
    return;
  }
  x_ = x / s;
  y_ = y / s;
}

ProjectivePoint ProjectivePoint::fromSphere(const Vec3& v) {
  // z = (vx + i vy) / (1 - vz); use the better-conditioned form near the north pole.
  const Complex w(v[0], v[1]);
  if (v[2] <= 0.0) return {w, 1.0 - v[2]};
  return {1.0 + v[2], std::conj(w)};
}

Complex ProjectivePoint::toAffine() const {
  if (y_ == Complex(0.0)) return {std::numeric_limits<double>::max(), 0.0};
  return x_ / y_;
}

Vec3 ProjectivePoint::toSphere() const {
  const Complex xy = x_ * std::conj(y_);
  const double nx = std::norm(x_), ny = std::norm(y_);
  const double s = nx + ny;
  return {2.0 * xy.real() / s, 2.0 * xy.imag() / s, (nx - ny) / s};
}

double chordal(const ProjectivePoint& p, const ProjectivePoint& q) {
  const double num = std::abs(p.x() * q.y() - p.y() * q.x());
  const double den = std::sqrt((std::norm(p.x()) + std::norm(p.y())) *
                               (std::norm(q.x()) + std::norm(q.y())));
  return num / den;
}

double sphericalDistance(const ProjectivePoint& p, const ProjectivePoint& q) {
  const Vec3 a = p.toSphere(), b = q.toSphere();
  const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  const Vec3 c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  return std::atan2(std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]), dot);
}

ProjectivePoint antipode(const ProjectivePoint& p) {
  return {std::conj(p.y()), -std::conj(p.x())};
}

double Mat2::maxAbsDiff(const Mat2& o) const {
  return std::max({std::abs(a - o.a), std::abs(b - o.b), std::abs(c - o.c), std::abs(d - o.d)});
}

Mat2 Mat2::inverse() const {
  const Complex k = 1.0 / det();
  return {k * d, -k * b, -k * c, k * a};
}

Mat2 Mat2::unimodular() const { return (1.0 / std::sqrt(det())) * (*this); }

bool sameProjective(const Mat2& p, const Mat2& q, double tol) {
  return p.maxAbsDiff(q) < tol || p.maxAbsDiff(Complex(-1.0) * q) < tol;
}

Mat2 rotation(const ProjectivePoint& axis, double angle) {
  const Vec3 n = axis.toSphere();
  const Complex i(0.0, 1.0);
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  // U = cos(t/2) I + i sin(t/2) N with N = [[nz, nx + i ny], [nx - i ny, -nz]].
  return {c + i * s * n[2], i * s * Complex(n[0], n[1]), i * s * Complex(n[0], -n[1]),
          c - i * s * n[2]};
}

}  // namespace icosa
