#pragma once

#include <cstdint>
#include <vector>

#include "chroma/numeric.hpp"

namespace chroma {

/// Largest product |A||B| over disjoint colour sets drawn from q colours:
/// floor(q/2) * ceil(q/2). Throws InvalidParameter for q < 1.
std::int64_t eta(int q);

/// Number of ordered pairs (A, B) attaining eta(q): C(q, q/2) for even q,
/// C(q, floor(q/2)) + C(q, ceil(q/2)) for odd q. Throws InvalidParameter for q < 1.
BigInt m_count(int q);

/// Onto maps from an n-set to a k-set, by inclusion-exclusion.
BigInt surjections(int n, int k);

/// c_q(K_{d,d}) = sum_a C(q,a) Surj(d,a) (q-a)^d.
BigCount count_colorings_kdd(int d, int q);

/// Colourings of K_{d,d} grouped by the sizes (a, b) = (|A|, |B|) of the
/// colour sets used on the two sides.
struct ColorPairCensus {
  struct Entry {
    int a = 0;
    int b = 0;
    /// Ordered (A, B) pairs with these sizes: C(q,a) C(q-a,b).
    BigInt multiplicity;
    int product = 0;
    /// Colourings using exactly A on one side and B on the other: Surj(d,a) Surj(d,b).
    BigInt class_size;
  };

  int d = 0;
  int q = 0;
  std::vector<Entry> entries;

  BigInt pair_count() const;
  /// sum of multiplicity * class_size; equals c_q(K_{d,d}).
  BigCount total() const;
  int max_product() const;
  /// Number of ordered (A, B) attaining max_product().
  BigInt dominant_pairs() const;
};

ColorPairCensus pair_census(int d, int q);

struct AsymptoticGap {
  /// c_q(K_{d,d}) / (eta^d m), exact.
  Rational ratio;
  /// c_q(K_{d,d}) - eta^d m (may be negative).
  BigInt difference;
};

/// Throws InvalidParameter for d < 1 or q < 2.
AsymptoticGap asymptotic_gap(int d, int q);

}  // namespace chroma
