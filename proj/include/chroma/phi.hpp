#pragma once

#include <optional>

#include "chroma/numeric.hpp"

namespace chroma {

/// The expansion threshold used to grow T and to carve out D.
///
/// Comparisons against rationals are exact: when the square of the value is
/// rational (user-supplied values, or d a power of two) they are decided in
/// rational arithmetic; otherwise the value is irrational and a 100-digit
/// approximation cannot tie with a rational of the sizes involved here.
class Phi {
 public:
  /// sqrt(d log2 d) / q. Throws InvalidParameter unless d >= 2 and q >= 2.
  static Phi for_regular(int d, int q);
  /// An arbitrary positive threshold. Throws InvalidParameter unless value > 0.
  static Phi from_value(double value);

  const Real& value() const { return value_; }
  double to_double() const { return value_.convert_to<double>(); }

  /// Sign of (phi - r).
  int compare(const Rational& r) const;
  /// k >= phi: u qualifies for T when its new-neighbour count satisfies this.
  bool reached_by(int k) const { return compare(Rational(k)) <= 0; }

 private:
  Phi(Real value, std::optional<Rational> square) : value_(std::move(value)), square_(std::move(square)) {}

  Real value_;
  std::optional<Rational> square_;
};

}  // namespace chroma
