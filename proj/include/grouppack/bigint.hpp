#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace gp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

// Compare rationals through their numerators only; boost::rational's mixed
// rational/int comparison templates recurse on plain int operands.
inline int rat_sign(const BigRat& x) {
  const BigInt& n = x.numerator();
  return n > 0 ? 1 : (n < 0 ? -1 : 0);
}
inline bool rat_zero(const BigRat& x) { return x.numerator() == 0; }

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline int big_sign(const BigInt& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

/// Binomial coefficient over arbitrary precision integers.
inline BigInt big_binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (BigInt i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
  return boost::multiprecision::pow(base, e);
}

}  // namespace gp
