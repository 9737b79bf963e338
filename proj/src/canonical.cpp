#include "chroma/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>

namespace chroma {

namespace {

using Partition = std::vector<VertexSet>;

/// Splits cells until every cell is equitable with respect to every other.
/// Sub-cells are ordered by their neighbour count into the splitter, which
/// keeps the result invariant under relabelling.
void refine(const Graph& g, Partition& p) {
  std::array<VertexSet, kMaxVertices + 1> buckets;
  Partition next;
  std::size_t w = 0;
  while (w < p.size()) {
    const VertexSet splitter = p[w];
    next.clear();
    bool split = false;
    for (VertexSet cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      int lo = kMaxVertices;
      int hi = 0;
      for (int v : cell) {
        const int c = (g.neighbors(v) & splitter).size();
        buckets[c].insert(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) {
        buckets[lo] = {};
        next.push_back(cell);
        continue;
      }
      split = true;
      for (int c = lo; c <= hi; ++c) {
        if (!buckets[c].empty()) next.push_back(buckets[c]);
        buckets[c] = {};
      }
    }
    if (split) {
      std::swap(p, next);
      w = 0;
    } else {
      ++w;
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  CanonicalLabelling run() {
    const int n = g_.order();
    Partition p;
    std::map<int, VertexSet> by_degree;
    for (int v = 0; v < n; ++v) by_degree[g_.degree(v)].insert(v);
    for (auto& [deg, cell] : by_degree) p.push_back(cell);
    std::vector<int> fixed;
    descend(std::move(p), fixed);

    CanonicalLabelling out;
    out.form.n = n;
    out.form.rows = *best_;
    out.position.assign(n, 0);
    for (int i = 0; i < n; ++i) out.position[best_lab_[i]] = i;
    return out;
  }

 private:
  void descend(Partition p, std::vector<int>& fixed) {
    refine(g_, p);
    if (p.size() == static_cast<std::size_t>(g_.order())) {
      leaf(p);
      return;
    }
    std::size_t target = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].size() > 1 && (p[target].size() == 1 || p[i].size() < p[target].size())) target = i;

    const VertexSet cell = p[target];
    std::vector<int> tried;
    for (int v : cell) {
      if (!tried.empty() && equivalent_to_tried(v, tried, fixed)) continue;
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != target) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back(VertexSet{v});
        VertexSet rest = p[i];
        rest.erase(v);
        child.push_back(rest);
      }
      fixed.push_back(v);
      descend(std::move(child), fixed);
      fixed.pop_back();
      tried.push_back(v);
    }
  }

  // Orbits of the group generated by the known automorphisms that fix `fixed` pointwise.
  bool equivalent_to_tried(int v, const std::vector<int>& tried, const std::vector<int>& fixed) {
    UnionFind orbits(g_.order());
    for (const auto& gamma : automorphisms_) {
      bool stabilises = std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; });
      if (!stabilises) continue;
      for (int u = 0; u < g_.order(); ++u) orbits.unite(u, gamma[u]);
    }
    const int root = orbits.find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int u) { return orbits.find(u) == root; });
  }

  void leaf(const Partition& p) {
    const int n = g_.order();
    std::vector<int> lab(n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) {
      lab[i] = p[i].first();
      pos[lab[i]] = i;
    }
    std::vector<std::uint64_t> rows(n);
    for (int i = 0; i < n; ++i) {
      VertexSet r;
      for (int u : g_.neighbors(lab[i])) r.insert(pos[u]);
      rows[i] = r.bits();
    }
    if (!best_ || rows < *best_) {
      best_ = std::move(rows);
      best_lab_ = std::move(lab);
    } else if (rows == *best_) {
      // Both labellings give the same graph, so best_lab_[i] -> lab[i] is an automorphism.
      std::vector<int> gamma(n);
      for (int i = 0; i < n; ++i) gamma[best_lab_[i]] = lab[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  std::optional<std::vector<std::uint64_t>> best_;
  std::vector<int> best_lab_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) {
  if (g.order() == 0) return {};
  return Search(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labelling(g).form; }

Graph canonical_graph(const Graph& g) {
  const CanonicalForm f = canonical_form(g);
  std::vector<VertexSet> rows;
  rows.reserve(f.rows.size());
  for (auto r : f.rows) rows.emplace_back(r);
  return Graph::from_rows(std::move(rows));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.n);
  for (auto r : f.rows) {
    h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace chroma
