#pragma once

// Points of the Riemann sphere in homogeneous coordinates and 2x2 Moebius
// matrices acting on them.  Infinity is (1, 0); the antipode of z is -1/conj(z).

#include <array>
#include <complex>
#include <limits>

#include "icosa/scalar.hpp"

namespace icosa {

using Vec3 = std::array<double, 3>;

class ProjectivePoint {
 public:
  ProjectivePoint() : x_(0.0), y_(1.0) {}
  /// Normalizes so the larger-modulus coordinate has modulus 1.
  ProjectivePoint(Complex x, Complex y);

  static ProjectivePoint affine(Complex z) { return {z, 1.0}; }
  static ProjectivePoint infinity() { return {1.0, 0.0}; }
  /// Inverse stereographic projection of a unit vector.
  static ProjectivePoint fromSphere(const Vec3& v);

  Complex x() const { return x_; }
  Complex y() const { return y_; }

  bool isInfinity(double tol = 0.0) const { return std::abs(y_) <= tol; }
  /// x / y; returns a huge real when y == 0.
  Complex toAffine() const;
  Vec3 toSphere() const;

 private:
  Complex x_, y_;
};

/// Chordal distance |x1 y2 - x2 y1| / (|p1| |p2|): chart independent, in [0, 1].
double chordal(const ProjectivePoint& p, const ProjectivePoint& q);

/// Great-circle angle between the two points on the unit sphere.
double sphericalDistance(const ProjectivePoint& p, const ProjectivePoint& q);

/// (conj y, -conj x): the antiholomorphic antipodal involution.
ProjectivePoint antipode(const ProjectivePoint& p);

/// Row-major [[a, b], [c, d]].
struct Mat2 {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Complex det() const { return a * d - b * c; }
  ProjectivePoint apply(const ProjectivePoint& p) const {
    return {a * p.x() + b * p.y(), c * p.x() + d * p.y()};
  }
  double maxAbsDiff(const Mat2& o) const;
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
  }
  friend Mat2 operator*(Complex s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  Mat2 inverse() const;
  /// Scales to determinant one (choice of square-root branch is arbitrary).
  Mat2 unimodular() const;
};

/// Projective equality of two determinant-one matrices (equal up to sign).
bool sameProjective(const Mat2& p, const Mat2& q, double tol);

/// SU(2) matrix of the rotation by `angle` about the axis through `axis`
/// (right-handed about the outward unit vector).
Mat2 rotation(const ProjectivePoint& axis, double angle);

}  // namespace icosa
