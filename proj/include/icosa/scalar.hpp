#pragma once

#include <complex>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <gmpxx.h>

namespace icosa {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

// Extended precision used for root polishing and local-degree fits.
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

inline Real50 toReal50(const Rational& q) {
  return Real50(q.get_num().get_str()) / Real50(q.get_den().get_str());
}

inline Real50 toReal50(const Integer& n) { return Real50(n.get_str()); }

template <class T>
inline constexpr bool is_std_complex_v = false;
template <class T>
inline constexpr bool is_std_complex_v<std::complex<T>> = true;

// Converts a coefficient into the arithmetic used for evaluation.
template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<From, Rational>) {
    if constexpr (std::is_same_v<To, Complex50> || std::is_same_v<To, Real50>) {
      return To(toReal50(v));
    } else {
      return To(v.get_d());
    }
  } else if constexpr (is_std_complex_v<From> && std::is_same_v<To, Complex50>) {
    return Complex50(Real50(v.real()), Real50(v.imag()));
  } else if constexpr (std::is_same_v<From, Complex50> && std::is_same_v<To, Complex>) {
    return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  } else {
    return To(v);
  }
}

template <class C>
bool isZeroCoefficient(const C& c) {
  if constexpr (std::is_same_v<C, Rational>) {
    return sgn(c) == 0;
  } else {
    return c == C{};
  }
}

}  // namespace icosa
