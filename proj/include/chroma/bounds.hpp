#pragma once

#include <optional>
#include <vector>

#include "chroma/numeric.hpp"

namespace chroma {

struct LemmaOptResult {
  /// (a^2 - delta^2)^(m/2).
  Real bound;
  Rational product;
  /// product <= bound, decided exactly as product^2 <= (a^2 - delta^2)^m.
  bool holds = false;
  bool equality = false;
  /// a <= delta: the bound collapses to 0 (or is undefined for odd m).
  bool degenerate = false;
};

/// Product bound for positive numbers with mean a that avoid (a - delta, a + delta).
/// Throws InvalidParameter when the list is empty, a value is not positive,
/// the mean differs from a, delta < 0, or some value lies inside the gap.
LemmaOptResult lemma_opt_bound(const std::vector<Rational>& values, const Rational& a, const Rational& delta);

/// Explicit upper bound on c_q(G) for every d-regular G on n vertices,
/// optionally restricted to alpha(G) <= (n/2)(1 - eps):
///
///   [sum_{i <= floor(n/phi)} C(n,i)]^q * B * (1 - 1/q^2)^ceil(n eps / 4)
///
/// B bounds prod_v a_v. Each D_k has at most floor(nd/(2d - phi)) vertices
/// (one class may be padded to ceil(n/2) when eps is given); S caps their
/// total and a = S/n. For even q, B = a^n. For odd q the largest product of
/// positive integers with sum S uses only floor(a) and floor(a) + 1, so with
/// delta = min(1/2 (1 - sqrt(log2 d / d)), a - floor(a), floor(a) + 1 - a)
/// the gap (a - delta, a + delta) is empty and B = (a^2 - delta^2)^(n/2).
/// With eps the smaller of the restricted and unrestricted bounds is returned;
/// the restricted one always wins for even n.
struct WeakBound {
  Real value;
  /// sum_{i <= t_max} C(n, i).
  BigInt container_choices;
  int t_max = 0;
  int d_cap = 0;
  Rational mean_cap;
  Real delta;
  Real product_bound;
  int matching_edges = 0;
};

WeakBound explicit_weak_bound(int n, int d, int q, std::optional<double> eps = std::nullopt);

/// c_q(K_{d,d})^(n/2d) kept as the exact pair (base, n, 2d), plus display values.
struct ReferenceBound {
  BigCount base;
  int numerator = 0;
  int denominator = 0;
  /// base^(n/2d)
  Real display;
  /// eta^(n/2) m^(n/2d)
  Real idealized;
};

/// Throws InvalidParameter for d < 1, q < 2 or n < 1.
ReferenceBound reference_bound(int n, int d, int q);

}  // namespace chroma
