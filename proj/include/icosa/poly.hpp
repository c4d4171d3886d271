#pragma once

// Dense univariate polynomials with exact rational coefficients, ascending.

#include <vector>

#include "icosa/forms.hpp"

namespace icosa {

using UPoly = std::vector<Rational>;

void trim(UPoly& p);
UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Rational& s, const UPoly& a);
/// Quotient of an exact division.  Throws NotProportional on a nonzero remainder.
UPoly divideExact(const UPoly& num, const UPoly& den);
UPoly derivative(const UPoly& p);
/// f(z, 1).
UPoly dehomogenize(const BivariateForm& f);
/// Coefficients from descending integer literals, as printed.
UPoly fromDescending(const std::vector<long long>& descending);

template <class T>
T evaluate(const UPoly& p, const T& z) {
  T acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + scalar_cast<T>(*it);
  return acc;
}

}  // namespace icosa
