#pragma once

// Scalar modes shared by every coefficient container.
//
//   Rational  exact (GMP), used for Jacobians at J = 0 and all linear-operator
//             identities.
//   Real      double, used by the nonlinear RG map (exp/log).
//   Complex   std::complex<double>, used for spectral grids.

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace rgspectra {

using Rational = mpq_class;
using Real = double;
using Complex = std::complex<double>;

template <class S>
inline constexpr bool is_scalar_v =
    std::is_same_v<S, Rational> || std::is_same_v<S, Real> || std::is_same_v<S, Complex>;

inline double magnitude(const Rational& v) { return std::abs(v.get_d()); }
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Complex& v) { return std::abs(v); }

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Complex& v) { return v == Complex{}; }

template <class S>
S from_rational(const Rational& q) {
  if constexpr (std::is_same_v<S, Rational>) {
    return q;
  } else {
    return S(q.get_d());
  }
}

template <class S>
S from_int(long v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(v);
  } else {
    return S(static_cast<double>(v));
  }
}

/// Parses "p/q", "p" or a decimal literal such as "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// "p/q" (or "p" when q == 1), canonical.
std::string to_string(const Rational& q);

/// 2^-n as an exact rational.
Rational pow2_inv(unsigned n);

}  // namespace rgspectra
