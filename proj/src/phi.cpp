#include "chroma/phi.hpp"

#include <cmath>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

bool is_power_of_two(int d) { return d > 0 && (d & (d - 1)) == 0; }

}  // namespace

Phi Phi::for_regular(int d, int q) {
  if (d < 2) throw InvalidParameter("phi: d must be >= 2 (log2 d = 0 leaves |T| unbounded)");
  if (q < 2) throw InvalidParameter("phi: q must be >= 2");
  const Real dd = d;
  Real value = boost::multiprecision::sqrt(dd * boost::multiprecision::log2(dd)) / q;
  std::optional<Rational> square;
  if (is_power_of_two(d)) {
    int log = 0;
    while ((1 << log) < d) ++log;
    square = Rational(BigInt(d) * log, BigInt(q) * q);
  }
  if (!(value < dd)) throw InvalidParameter("phi: expected phi < d");
  return Phi(std::move(value), std::move(square));
}

Phi Phi::from_value(double value) {
  if (!(value > 0) || !std::isfinite(value)) throw InvalidParameter("phi must be a positive real");
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  const BigInt scaled(static_cast<long long>(std::ldexp(mantissa, 53)));
  exponent -= 53;
  const Rational exact = exponent >= 0 ? Rational(scaled << exponent)
                                       : Rational(scaled, BigInt(1) << -exponent);
  return Phi(Real(value), exact * exact);
}

int Phi::compare(const Rational& r) const {
  if (r <= 0) return 1;
  if (square_) return boost::multiprecision::sign(Rational(*square_ - r * r));
  const Real approx = Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
  return value_ < approx ? -1 : (value_ > approx ? 1 : 0);
}

}  // namespace chroma
