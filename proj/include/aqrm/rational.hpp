#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace aqrm {

// Exact arbitrary-precision arithmetic.  Every coefficient in the symbolic
// layer is a BigRational; doubles appear only at the numeric boundary.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& r) { return numerator(r); }
inline BigInt rat_den(const BigRational& r) { return denominator(r); }

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

// n! as a BigInt.
inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Binomial coefficient C(n, k) as a BigInt; zero outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int t = 1; t <= k; ++t) {
    c *= n - k + t;
    c /= t;
  }
  return c;
}

}  // namespace aqrm
