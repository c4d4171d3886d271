#include "icosa/poly.hpp"

#include <algorithm>

#include "icosa/errors.hpp"

namespace icosa {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly operator*(const Rational& s, const UPoly& a) {
  UPoly r = a;
  for (auto& c : r) c *= s;
  trim(r);
  return r;
}

UPoly divideExact(const UPoly& num, const UPoly& den) {
  UPoly d = den;
  trim(d);
  if (d.empty()) throw std::invalid_argument("divideExact: zero divisor");
  UPoly rem = num;
  trim(rem);
  if (rem.size() < d.size()) {
    if (!rem.empty()) throw NotProportional("divideExact: nonzero remainder");
    return {};
  }
  UPoly q(rem.size() - d.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = rem[k + d.size() - 1] / d.back();
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  trim(rem);
  if (!rem.empty()) throw NotProportional("divideExact: nonzero remainder");
  trim(q);
  return q;
}

UPoly derivative(const UPoly& p) {
  UPoly r;
  for (std::size_t k = 1; k < p.size(); ++k) r.push_back(p[k] * static_cast<long>(k));
  trim(r);
  return r;
}

UPoly dehomogenize(const BivariateForm& f) {
  UPoly r(f.degree() + 1, Rational(0));
  for (const auto& [i, c] : f.terms()) r[i] = c;
  trim(r);
  return r;
}

UPoly fromDescending(const std::vector<long long>& descending) {
  UPoly r;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) r.push_back(Rational(static_cast<long>(*it)));
  trim(r);
  return r;
}

}  // namespace icosa
