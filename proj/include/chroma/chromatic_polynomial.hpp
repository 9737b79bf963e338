#pragma once

#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/numeric.hpp"

namespace chroma {

/// Default cap on n for deletion-contraction.
inline constexpr int kDefaultPolynomialCap = 14;

/// Integer polynomial in q, coefficients stored lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(long long c);
  /// q^k
  static Polynomial monomial(int k);
  /// q (q-1) ... (q-k+1)
  static Polynomial falling_factorial(int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int k) const { return k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : BigInt(0); }
  BigInt evaluate(long long q) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Chromatic polynomial P(g, q) by deletion-contraction with component
/// factorisation, simplicial-vertex elimination and a per-call memo keyed on
/// canonical form. Throws CapExceeded when g has more than `cap` vertices.
Polynomial chromatic_polynomial(const Graph& g, int cap = kDefaultPolynomialCap);

}  // namespace chroma
