#include "chroma/verdicts.hpp"

#include <algorithm>
#include <thread>

#include "chroma/counting.hpp"
#include "chroma/errors.hpp"
#include "chroma/graph6.hpp"
#include "chroma/kdd.hpp"

namespace chroma {

namespace {

int require_regular(const Graph& g, const char* who) {
  const GraphClass c = classify(g);
  if (!c.regular_degree) throw InvalidParameter(std::string(who) + ": graph is not regular");
  const int d = *c.regular_degree;
  if (d < 2) throw InvalidParameter(std::string(who) + ": degree must be >= 2");
  return d;
}

std::string graph_id(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? write_graph6(g) : std::string();
}

Comparison compare(const BigInt& lhs_base, unsigned lhs_exp, const BigInt& rhs_base, unsigned rhs_exp) {
  Comparison c;
  c.lhs = {lhs_base, lhs_exp};
  c.rhs = {rhs_base, rhs_exp};
  const BigInt l = c.lhs.value();
  const BigInt r = c.rhs.value();
  c.holds = l <= r;
  c.equality = l == r;
  if (lhs_base > 0) {
    c.slack_log2 = (rhs_exp * log2_of(rhs_base) - lhs_exp * log2_of(lhs_base)) / lhs_exp;
  }
  return c;
}

void settle(Verdict& v) {
  v.holds = std::any_of(v.comparisons.begin(), v.comparisons.end(), [](const Comparison& c) { return c.holds; });
  const bool some_equal =
      std::any_of(v.comparisons.begin(), v.comparisons.end(), [](const Comparison& c) { return c.equality; });
  const bool some_strict = std::any_of(v.comparisons.begin(), v.comparisons.end(),
                                       [](const Comparison& c) { return c.holds && !c.equality; });
  v.equality = some_equal && !some_strict;
  for (const Comparison& c : v.comparisons) {
    if (!c.slack_log2) continue;
    if (!v.slack_log2 || *c.slack_log2 > *v.slack_log2) v.slack_log2 = c.slack_log2;
  }
}

}  // namespace

Verdict conjecture_verdict(const Graph& g, int q) {
  const int d = require_regular(g, "conjecture_verdict");
  if (q < 0) throw InvalidParameter("conjecture_verdict: q must be >= 0");
  Verdict v;
  v.graph6 = graph_id(g);
  v.kind = "colorings";
  v.target = "K" + std::to_string(q);
  v.n = g.order();
  v.d = d;
  v.q = q;
  v.count = count_colorings(g, q);
  v.comparisons.push_back(compare(v.count, 2 * d, count_colorings_kdd(d, q), v.n));
  settle(v);
  return v;
}

Verdict hom_conjecture_verdict(const Graph& g, const TargetGraph& h, const std::string& target_name) {
  const int d = require_regular(g, "hom_conjecture_verdict");
  Verdict v;
  v.graph6 = graph_id(g);
  v.kind = "hom";
  v.target = target_name;
  v.n = g.order();
  v.d = d;
  v.count = count_homomorphisms(g, h);
  v.comparisons.push_back(compare(v.count, 2 * d, count_homomorphisms_complete_bipartite(d, d, h), v.n));
  v.comparisons.push_back(compare(v.count, d + 1, count_homomorphisms(complete_graph(d + 1), h), v.n));
  settle(v);
  return v;
}

Verdict alon_kahn_verdict(const Graph& g) {
  const int d = require_regular(g, "alon_kahn_verdict");
  Verdict v;
  v.graph6 = graph_id(g);
  v.kind = "indsets";
  v.target = "H_ind";
  v.n = g.order();
  v.d = d;
  v.count = count_independent_sets(g);
  v.comparisons.push_back(compare(v.count, 2 * d, (BigInt(1) << (d + 1)) - 1, v.n));
  settle(v);
  return v;
}

ScanResult constrained_scan(const std::vector<Graph>& family, int q, double eps, int jobs) {
  if (q < 0) throw InvalidParameter("constrained_scan: q must be >= 0");
  if (!(eps >= 0 && eps <= 1)) throw InvalidParameter("constrained_scan: eps must lie in [0, 1]");
  ScanResult result;
  result.q = q;
  result.eps = eps;
  result.max_count = 0;
  if (family.empty()) return result;

  result.n = family.front().order();
  for (const Graph& g : family) {
    const GraphClass c = classify(g);
    if (!c.regular_degree) throw InvalidParameter("constrained_scan: family member is not regular");
    if (&g == &family.front()) result.d = *c.regular_degree;
    if (g.order() != result.n || *c.regular_degree != result.d)
      throw InvalidParameter("constrained_scan: family mixes different (n, d)");
  }

  std::vector<ScanRow> rows(family.size());
  const double limit = result.n * (1 - eps);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < family.size(); i += stride) {
      ScanRow& r = rows[i];
      r.graph6 = write_graph6(family[i]);
      r.alpha = independence_number(family[i]);
      r.count = count_colorings(family[i], q);
      r.admitted = 2.0 * r.alpha <= limit + 1e-9;
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.graph6 < b.graph6; });
  for (const ScanRow& r : rows) {
    if (!r.admitted) continue;
    if (result.argmax.empty() || r.count > result.max_count) {
      result.max_count = r.count;
      result.argmax = r.graph6;
    }
  }
  result.rows = std::move(rows);
  return result;
}

}  // namespace chroma
