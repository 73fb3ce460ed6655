#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nchodge/errors.hpp"

namespace nchodge {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer.  Expression templates are disabled so that
/// `auto` and generic code always see plain value types.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Exact rational number, always stored reduced with positive denominator
/// (the backend canonicalises on every operation).
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw input_error("rational: zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Canonical text form: "p" or "p/q" with q > 1, leading '-' for negatives.
inline std::string rational_str(const Rational& r) { return r.str(); }

} // namespace nchodge
