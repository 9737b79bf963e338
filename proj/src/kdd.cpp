#include "chroma/kdd.hpp"

#include <algorithm>

#include "chroma/errors.hpp"

namespace chroma {

std::int64_t eta(int q) {
  if (q < 1) throw InvalidParameter("eta: q must be >= 1");
  return static_cast<std::int64_t>(q / 2) * ((q + 1) / 2);
}

BigInt m_count(int q) {
  if (q < 1) throw InvalidParameter("m_count: q must be >= 1");
  if (q % 2 == 0) return binomial(q, q / 2);
  return binomial(q, q / 2) + binomial(q, (q + 1) / 2);
}

BigInt surjections(int n, int k) {
  if (n < 0 || k < 0) throw InvalidParameter("surjections: arguments must be >= 0");
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    BigInt term = binomial(k, i) * power(BigInt(k - i), static_cast<unsigned>(n));
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

BigCount count_colorings_kdd(int d, int q) {
  if (d < 1) throw InvalidParameter("count_colorings_kdd: d must be >= 1");
  if (q < 0) throw InvalidParameter("count_colorings_kdd: q must be >= 0");
  // One side uses exactly a colours; each vertex of the other side avoids them.
  BigCount total = 0;
  for (int a = 1; a <= q; ++a)
    total += binomial(q, a) * surjections(d, a) * power(BigInt(q - a), static_cast<unsigned>(d));
  return total;
}

BigInt ColorPairCensus::pair_count() const {
  BigInt s = 0;
  for (const Entry& e : entries) s += e.multiplicity;
  return s;
}

BigCount ColorPairCensus::total() const {
  BigCount s = 0;
  for (const Entry& e : entries) s += e.multiplicity * e.class_size;
  return s;
}

int ColorPairCensus::max_product() const {
  int best = 0;
  for (const Entry& e : entries) best = std::max(best, e.product);
  return best;
}

BigInt ColorPairCensus::dominant_pairs() const {
  const int best = max_product();
  BigInt s = 0;
  for (const Entry& e : entries)
    if (e.product == best) s += e.multiplicity;
  return s;
}

ColorPairCensus pair_census(int d, int q) {
  if (d < 1 || q < 1) throw InvalidParameter("pair_census: need d >= 1 and q >= 1");
  ColorPairCensus census;
  census.d = d;
  census.q = q;
  std::vector<BigInt> onto(q + 1);
  for (int k = 0; k <= q; ++k) onto[k] = surjections(d, k);
  for (int a = 1; a < q; ++a) {
    for (int b = 1; a + b <= q; ++b) {
      ColorPairCensus::Entry e;
      e.a = a;
      e.b = b;
      e.multiplicity = binomial(q, a) * binomial(q - a, b);
      e.product = a * b;
      e.class_size = onto[a] * onto[b];
      census.entries.push_back(std::move(e));
    }
  }
  return census;
}

AsymptoticGap asymptotic_gap(int d, int q) {
  if (d < 1) throw InvalidParameter("asymptotic_gap: d must be >= 1");
  if (q < 2) throw InvalidParameter("asymptotic_gap: q must be >= 2 (eta vanishes at q = 1)");
  const BigCount exact = count_colorings_kdd(d, q);
  const BigInt dominant = power(BigInt(eta(q)), static_cast<unsigned>(d)) * m_count(q);
  return {Rational(exact, dominant), BigInt(exact - dominant)};
}

}  // namespace chroma
