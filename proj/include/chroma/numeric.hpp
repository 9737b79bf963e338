#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace chroma {

/// Exact non-negative counts (c_q, hom, i). Signed type so polynomial
/// coefficients can share it; counting paths never produce negatives.
using BigCount = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 100 decimal digits; used for display values and the explicit bounds.
using Real = boost::multiprecision::cpp_bin_float_100;

BigInt binomial(int n, int k);
BigInt power(const BigInt& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);

/// log2 of a positive integer as a double (for human-readable slack only).
double log2_of(const BigInt& x);

}  // namespace chroma
