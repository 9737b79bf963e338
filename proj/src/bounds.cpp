#include "chroma/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "chroma/errors.hpp"
#include "chroma/kdd.hpp"
#include "chroma/phi.hpp"
#include "chroma/certificate.hpp"

namespace chroma {

namespace {

Real to_real(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

}  // namespace

LemmaOptResult lemma_opt_bound(const std::vector<Rational>& values, const Rational& a, const Rational& delta) {
  if (values.empty()) throw InvalidParameter("lemma_opt_bound: empty list");
  if (delta < 0) throw InvalidParameter("lemma_opt_bound: delta must be >= 0");
  Rational sum = 0;
  Rational product = 1;
  for (const Rational& x : values) {
    if (x <= 0) throw InvalidParameter("lemma_opt_bound: values must be positive");
    if (x > a - delta && x < a + delta)
      throw InvalidParameter("lemma_opt_bound: a value lies inside (a - delta, a + delta)");
    sum += x;
    product *= x;
  }
  const unsigned m = static_cast<unsigned>(values.size());
  if (sum != a * m) throw InvalidParameter("lemma_opt_bound: mean of values differs from a");

  LemmaOptResult r;
  r.product = product;
  const Rational base = a * a - delta * delta;
  r.degenerate = a <= delta;
  const Rational base_pow = power(base, m);
  const Rational lhs = product * product;
  r.holds = base >= 0 && lhs <= base_pow;
  r.equality = base >= 0 && lhs == base_pow;
  const Real real_base = to_real(base);
  r.bound = real_base <= 0 ? Real(0) : boost::multiprecision::pow(real_base, Real(m) / 2);
  return r;
}

WeakBound explicit_weak_bound(int n, int d, int q, std::optional<double> eps) {
  if (d < 2) throw InvalidParameter("explicit_weak_bound: d must be >= 2");
  if (n < d + 1) throw InvalidParameter("explicit_weak_bound: n must be >= d + 1");
  if (n > 100000) throw InvalidParameter("explicit_weak_bound: n is unreasonably large");
  if (q < 3) throw InvalidParameter("explicit_weak_bound: q must be >= 3");
  if (eps && !(*eps >= 0 && *eps <= 1)) throw InvalidParameter("explicit_weak_bound: eps must lie in [0, 1]");

  const Phi phi = Phi::for_regular(d, q);
  WeakBound w;

  // Largest t with t phi <= n.
  int t = static_cast<int>(std::floor(n / phi.to_double())) + 1;
  while (t > 0 && phi.compare(Rational(n, t)) > 0) --t;
  w.t_max = std::min(t, n);
  w.container_choices = 0;
  for (int i = 0; i <= w.t_max; ++i) w.container_choices += binomial(n, i);

  w.d_cap = d_size_cap(n, d, phi);
  const Real containers = boost::multiprecision::pow(Real(w.container_choices), q);

  // Fills mean_cap, delta and product_bound for a cap S on sum_k |D_k|.
  auto product_core = [&](WeakBound& out, int sum_cap) {
    out.mean_cap = Rational(sum_cap, n);
    const Real mean = to_real(out.mean_cap);
    if (q % 2 == 0) {
      out.delta = 0;
      out.product_bound = boost::multiprecision::pow(mean, n);
      return;
    }
    const Real dd = d;
    Real delta = (1 - boost::multiprecision::sqrt(boost::multiprecision::log2(dd) / dd)) / 2;
    // The largest product of positive integers summing to S takes only the
    // values floor(a) and floor(a) + 1, so the gap must stay between them.
    const Real low = sum_cap / n;
    delta = std::min({delta, mean - low, low + 1 - mean});
    if (delta < 0) delta = 0;
    out.delta = delta;
    out.product_bound = boost::multiprecision::pow(mean * mean - delta * delta, Real(n) / 2);
  };

  product_core(w, std::min(q * n, q * w.d_cap));
  Real value = containers * w.product_bound;
  if (eps) {
    // The matching step pads one class up to ceil(n/2) vertices, which can
    // raise S for odd n; the unrestricted bound stays valid, so keep the smaller.
    WeakBound m = w;
    product_core(m, std::min(q * n, (q - 1) * w.d_cap + std::max(w.d_cap, (n + 1) / 2)));
    // Tolerance absorbs eps values like 1 - 2 alpha / n that carry rounding error.
    m.matching_edges = std::max(0, static_cast<int>(std::ceil(n * *eps / 4.0 - 1e-9)));
    const Real restricted =
        containers * m.product_bound * boost::multiprecision::pow(Real(q * q - 1) / (q * q), m.matching_edges);
    if (restricted < value) {
      w = std::move(m);
      value = restricted;
    }
  }
  w.value = value;
  return w;
}

ReferenceBound reference_bound(int n, int d, int q) {
  if (n < 1 || d < 1 || q < 2) throw InvalidParameter("reference_bound: need n >= 1, d >= 1, q >= 2");
  ReferenceBound r;
  r.base = count_colorings_kdd(d, q);
  r.numerator = n;
  r.denominator = 2 * d;
  const Real exponent = Real(n) / (2 * d);
  r.display = boost::multiprecision::pow(Real(r.base), exponent);
  r.idealized = boost::multiprecision::pow(Real(eta(q)), Real(n) / 2) *
                boost::multiprecision::pow(Real(m_count(q)), exponent);
  return r;
}

}  // namespace chroma
