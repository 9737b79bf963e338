#include "chroma/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "chroma/counting.hpp"
#include "chroma/errors.hpp"

namespace chroma {

namespace {

struct DegreeRange {
  int min = 0;
  int max = 0;
};

DegreeRange degree_range(const Graph& g) {
  DegreeRange r{g.order() > 0 ? g.degree(0) : 0, 0};
  for (int v = 0; v < g.order(); ++v) {
    r.min = std::min(r.min, g.degree(v));
    r.max = std::max(r.max, g.degree(v));
  }
  return r;
}

}  // namespace

VertexSet closure_of(const Graph& g, VertexSet T, const Phi& phi) {
  const VertexSet covered = g.neighborhood(T);
  VertexSet D;
  for (int v : g.vertices() - covered)
    if (!phi.reached_by((g.neighbors(v) - covered).size())) D.insert(v);
  return D;
}

Certificate build_certificate(const Graph& g, VertexSet I, const Phi& phi) {
  if (I.empty()) throw InvalidParameter("build_certificate: I must be nonempty");
  if (!I.subset_of(g.vertices())) throw InvalidParameter("build_certificate: I has a vertex out of range");
  if (!g.is_independent(I)) throw InvalidParameter("build_certificate: I is not independent");

  Certificate c{{}, {}, I, phi, {}};
  const int first = I.first();
  c.T.insert(first);
  c.trace.push_back({first, g.degree(first)});
  VertexSet covered = g.neighbors(first);
  for (;;) {
    bool grew = false;
    for (int u : I - c.T) {
      const int gain = (g.neighbors(u) - covered).size();
      if (phi.reached_by(gain)) {
        c.T.insert(u);
        c.trace.push_back({u, gain});
        covered |= g.neighbors(u);
        grew = true;
        break;
      }
    }
    if (!grew) break;
  }
  c.D = closure_of(g, c.T, phi);
  return c;
}

bool CertificateReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

const CertificateCheck& CertificateReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no certificate check named " + name);
}

CertificateReport verify_certificate(const Graph& g, const Certificate& c) {
  const int n = g.order();
  const DegreeRange deg = degree_range(g);
  const Phi& phi = c.phi;
  const double phi_d = phi.to_double();
  const VertexSet covered = g.neighborhood(c.T);
  const int t = c.T.size();
  const int dsize = c.D.size();

  CertificateReport report;
  auto add = [&](std::string name, bool passed, double slack) {
    report.checks.push_back({std::move(name), passed, slack});
  };

  // |T| phi <= n, i.e. phi <= n / |T|.
  if (t == 0)
    add("T_size", true, n / phi_d);
  else
    add("T_size", phi.compare(Rational(n, t)) <= 0, n / phi_d - t);

  add("I_subset_D", c.source.subset_of(c.D), 0.0 - static_cast<double>((c.source - c.D).size()));

  // |D| (Dmax + Dmin - phi) <= n Dmax  <=>  phi >= Dmax + Dmin - n Dmax / |D|.
  {
    const int span = deg.max + deg.min;
    const bool vacuous = dsize == 0 || phi.compare(Rational(span)) >= 0;
    const bool ok = vacuous || phi.compare(Rational(span) - Rational(n * deg.max, dsize)) >= 0;
    const double cap = span - phi_d > 0 ? n * deg.max / (span - phi_d) : n;
    add("D_size", ok, cap - dsize);
  }
  // |D| <= (n/2)(1 + phi/d)  <=>  phi >= d (2|D|/n - 1). Only follows from
  // D_size when the graph is regular.
  if (deg.max > 0 && deg.min == deg.max) {
    const Rational need = Rational(deg.max) * (Rational(2 * dsize, n) - 1);
    add("D_size_relaxed", phi.compare(need) >= 0, 0.5 * n * (1 + phi_d / deg.max) - dsize);
  }

  add("D_disjoint_NT", !c.D.intersects(covered), 0.0 - static_cast<double>((c.D & covered).size()));
  add("T_subset_I", c.T.subset_of(c.source), 0.0 - static_cast<double>((c.T - c.source).size()));

  int worst_outside = 0;
  bool outdegree_ok = true;
  for (int v : c.D) {
    const int outside = (g.neighbors(v) - covered).size();
    worst_outside = std::max(worst_outside, outside);
    if (phi.reached_by(outside)) outdegree_ok = false;
  }
  add("D_outdegree", outdegree_ok, phi_d - worst_outside);

  int cross = 0;
  for (int v : c.D) cross += (g.neighbors(v) & covered).size();
  report.cross_edges = cross;
  const int upper = deg.max * (n - dsize);
  add("edges_upper", cross <= upper, upper - cross);
  // cross >= (Dmin - phi)|D|  <=>  phi >= Dmin - cross/|D|.
  if (dsize == 0)
    add("edges_lower", true, cross);
  else
    add("edges_lower", phi.compare(Rational(deg.min) - Rational(cross, dsize)) >= 0,
        cross - (deg.min - phi_d) * dsize);
  return report;
}

int d_size_cap(int n, int d, const Phi& phi) {
  // Largest k with k (2d - phi) <= n d, i.e. phi >= 2d - n d / k.
  if (d <= 0 || phi.compare(Rational(2 * d)) >= 0) return n;
  int best = 0;
  for (int k = 1; k <= n; ++k)
    if (phi.compare(Rational(2 * d) - Rational(n * d, k)) >= 0) best = k;
  return best;
}

DProfile make_profile(int n, std::vector<VertexSet> sets) {
  DProfile p;
  p.q = static_cast<int>(sets.size());
  p.multiplicity.assign(n, 0);
  p.completed.assign(sets.size(), false);
  for (VertexSet s : sets) {
    if (!s.subset_of(VertexSet::range(n))) throw InvalidParameter("profile set out of range");
    for (int v : s) ++p.multiplicity[v];
    p.sum += s.size();
  }
  p.product = 1;
  for (int a : p.multiplicity) p.product *= a;
  p.D = std::move(sets);
  return p;
}

DProfile d_profile(const Graph& g, std::span<const int> coloring, int q, const Phi& phi) {
  const int n = g.order();
  if (static_cast<int>(coloring.size()) != n) throw InvalidParameter("d_profile: colouring has wrong length");
  if (q < 1) throw InvalidParameter("d_profile: q must be >= 1");
  std::vector<VertexSet> classes(q);
  for (int v = 0; v < n; ++v) {
    if (coloring[v] < 0 || coloring[v] >= q) throw InvalidParameter("d_profile: colour out of range");
    classes[coloring[v]].insert(v);
  }
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (coloring[u] == coloring[v]) throw InvalidParameter("d_profile: colouring is not proper");

  const VertexSet filler = VertexSet::range(d_size_cap(n, degree_range(g).max, phi));
  std::vector<VertexSet> sets(q);
  std::vector<bool> completed(q, false);
  for (int k = 0; k < q; ++k) {
    if (classes[k].empty()) {
      sets[k] = filler;
      completed[k] = true;
    } else {
      sets[k] = build_certificate(g, classes[k], phi).D;
    }
  }
  DProfile p = make_profile(n, std::move(sets));
  p.completed = std::move(completed);
  return p;
}

BigCount compatible_count(const DProfile& p) { return p.product; }

RefinedBound refined_bound(const Graph& g, const DProfile& p, int q) {
  const int n = g.order();
  if (q != p.q) throw InvalidParameter("refined_bound: q does not match the profile");
  if (static_cast<int>(p.multiplicity.size()) != n) throw InvalidParameter("refined_bound: profile is for another graph");
  if (q < 1) throw InvalidParameter("refined_bound: q must be >= 1");

  RefinedBound r;
  const int half = (n + 1) / 2;
  int anchor = -1;
  for (int k = 0; k < q && anchor < 0; ++k)
    if (p.D[k].size() >= half) anchor = k;

  std::vector<VertexSet> sets = p.D;
  if (anchor < 0) {
    anchor = 0;
    for (int k = 1; k < q; ++k)
      if (sets[k].size() > sets[anchor].size()) anchor = k;
    for (int v = 0; v < n && sets[anchor].size() < half; ++v) sets[anchor].insert(v);
  }
  const DProfile padded = make_profile(n, sets);

  r.anchor = anchor;
  r.anchor_set = sets[anchor];
  r.padded_product = padded.product;
  // Matching edges of g[D_anchor], mapped back to original labels.
  const std::vector<int> labels = r.anchor_set.to_vector();
  for (auto [x, y] : greedy_maximal_matching(induced_subgraph(g, r.anchor_set)))
    r.matching.emplace_back(labels[x], labels[y]);

  const Rational per_edge(BigInt(q) * q - 1, BigInt(q) * q);
  r.value = Rational(padded.product) * power(per_edge, static_cast<unsigned>(r.matching.size()));
  return r;
}

}  // namespace chroma
