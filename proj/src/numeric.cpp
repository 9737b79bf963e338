#include "chroma/numeric.hpp"

#include <cmath>
#include <limits>

namespace chroma {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt power(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

double log2_of(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 60) return std::log2(x.convert_to<double>());
  const unsigned shift = bits - 52;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + shift;
}

}  // namespace chroma
