#pragma once

// Homogeneous polynomials in two variables with sparse coefficient storage,
// plus the covariant constructions (Hessian and Jacobian determinants) that
// produce the icosahedral invariants H and T from F.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "icosa/scalar.hpp"

namespace icosa {

/// Homogeneous form sum c_i x^i y^(d-i).  Terms are keyed by the x-exponent;
/// the y-exponent is implied by the degree.  Zero coefficients are never stored.
template <class C>
class BasicForm {
 public:
  using Coefficient = C;
  using Terms = std::map<int, C>;

  BasicForm() = default;
  explicit BasicForm(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("BasicForm: negative degree");
  }
  BasicForm(int degree, const Terms& terms) : BasicForm(degree) {
    for (const auto& [i, c] : terms) addTerm(i, c);
  }

  static BasicForm monomial(int xExp, int yExp, const C& c) {
    BasicForm f(xExp + yExp);
    f.addTerm(xExp, c);
    return f;
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  /// Coefficient of x^i y^(d-i); zero when absent.
  C coefficient(int xExp) const {
    auto it = terms_.find(xExp);
    return it == terms_.end() ? C(0) : it->second;
  }

  void addTerm(int xExp, const C& c) {
    if (xExp < 0 || xExp > degree_)
      throw std::invalid_argument("BasicForm: exponent outside degree");
    C v = c;
    if constexpr (std::is_same_v<C, Rational>) v.canonicalize();
    if (isZeroCoefficient(v)) return;
    auto [it, inserted] = terms_.try_emplace(xExp, v);
    if (!inserted) {
      it->second += v;
      if (isZeroCoefficient(it->second)) terms_.erase(it);
    }
  }

  BasicForm dx() const {
    BasicForm r(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [i, c] : terms_)
      if (i > 0) r.addTerm(i - 1, C(c * C(i)));
    return r;
  }

  BasicForm dy() const {
    BasicForm r(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [i, c] : terms_)
      if (degree_ - i > 0) r.addTerm(i, C(c * C(degree_ - i)));
    return r;
  }

  /// Value at (x, y); coefficients are converted into the point's arithmetic.
  template <class T>
  T evaluate(const T& x, const T& y) const {
    std::vector<T> xp(degree_ + 1, T(1)), yp(degree_ + 1, T(1));
    for (int k = 1; k <= degree_; ++k) {
      xp[k] = xp[k - 1] * x;
      yp[k] = yp[k - 1] * y;
    }
    T acc(0);
    for (const auto& [i, c] : terms_) acc += scalar_cast<T>(c) * xp[i] * yp[degree_ - i];
    return acc;
  }

  template <class D>
  BasicForm<D> convert() const {
    BasicForm<D> r(degree_);
    for (const auto& [i, c] : terms_) r.addTerm(i, scalar_cast<D>(c));
    return r;
  }

  BasicForm& operator+=(const BasicForm& o) {
    requireSameDegree(o);
    for (const auto& [i, c] : o.terms_) addTerm(i, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    requireSameDegree(o);
    for (const auto& [i, c] : o.terms_) addTerm(i, C(-c));
    return *this;
  }
  BasicForm& operator*=(const C& factor) {
    C s = factor;
    if constexpr (std::is_same_v<C, Rational>) s.canonicalize();
    if (isZeroCoefficient(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [i, c] : terms_) c *= s;
    return *this;
  }

  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator-(BasicForm a) { return a *= C(-1); }
  friend BasicForm operator*(BasicForm a, const C& s) { return a *= s; }
  friend BasicForm operator*(const C& s, BasicForm a) { return a *= s; }
  friend BasicForm operator*(const BasicForm& a, const BasicForm& b) {
    BasicForm r(a.degree_ + b.degree_);
    for (const auto& [i, c] : a.terms_)
      for (const auto& [j, e] : b.terms_) r.addTerm(i + j, C(c * e));
    return r;
  }
  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void requireSameDegree(const BasicForm& o) const {
    if (o.degree_ != degree_ && !o.isZero() && !isZero())
      throw std::invalid_argument("BasicForm: degree mismatch");
  }

  int degree_ = 0;
  Terms terms_;
};

/// Exact form; houses F, H, T and every symbolic identity.
using BivariateForm = BasicForm<Rational>;
/// Floating form; used for maps with complex family coefficients.
using NumericForm = BasicForm<Complex>;

template <class C>
BasicForm<C> power(const BasicForm<C>& f, int n) {
  BasicForm<C> r = BasicForm<C>::monomial(0, 0, C(1));
  for (int k = 0; k < n; ++k) r = r * f;
  return r;
}

/// F_xx F_yy - F_xy^2, unnormalized.
template <class C>
BasicForm<C> hessianDet(const BasicForm<C>& f) {
  if (f.degree() < 2) throw std::invalid_argument("hessianDet: degree < 2");
  const auto fx = f.dx();
  const auto fy = f.dy();
  return fx.dx() * fy.dy() - fx.dy() * fx.dy();
}

/// F_x G_y - F_y G_x, unnormalized.
template <class C>
BasicForm<C> jacobianDet(const BasicForm<C>& f, const BasicForm<C>& g) {
  if (f.degree() < 1 || g.degree() < 1) throw std::invalid_argument("jacobianDet: degree < 1");
  return f.dx() * g.dy() - f.dy() * g.dx();
}

/// lambda with candidate == lambda * target exactly.  Throws NotProportional.
Rational normalizeToMatch(const BivariateForm& candidate, const BivariateForm& target);

/// Builds an exact form from (x-exponent, integer coefficient) pairs.
BivariateForm formFromIntegers(int degree, const std::vector<std::pair<int, long long>>& terms);

struct CanonicalInvariants {
  BivariateForm F;  // degree 12
  BivariateForm H;  // degree 20, monic in x
  BivariateForm T;  // degree 30, monic in x
  Rational hessianScale;   // hessianDet(F) = hessianScale * H
  Rational jacobianScale;  // jacobianDet(F, H) = jacobianScale * T
};

/// The printed F, H, T with normalization scalars computed from the covariants.
const CanonicalInvariants& canonicalInvariants();

/// True iff 1728 F^5 - H^3 + T^2 vanishes identically.
bool verifySyzygy(const BivariateForm& F, const BivariateForm& H, const BivariateForm& T);
bool verifySyzygy();

/// {"degree": d, "terms": [[i, j, numerator, denominator], ...]}; integers that
/// overflow 64 bits are written as decimal strings.
nlohmann::json toJson(const BivariateForm& f);
BivariateForm formFromJson(const nlohmann::json& j);

std::string formatForm(const BivariateForm& f);

}  // namespace icosa
