#include "chroma/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "chroma/chromatic_polynomial.hpp"
#include "chroma/errors.hpp"

namespace chroma {

std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.order());
  VertexSet seen;
  for (int root = 0; root < g.order(); ++root) {
    if (seen.contains(root)) continue;
    seen.insert(root);
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const int v = order[head++];
      for (int u : g.neighbors(v) - seen) {
        seen.insert(u);
        order.push_back(u);
      }
    }
  }
  return order;
}

namespace {

class ColoringCounter {
 public:
  ColoringCounter(const Graph& g, int q)
      : g_(g), q_(q), order_(bfs_order(g)), color_(g.order(), -1),
        marks_(static_cast<std::size_t>(g.order()) * q, 0) {}

  BigCount run() {
    if (g_.order() == 0) return 1;
    total_ = 0;
    extend(0);
    return total_;
  }

 private:
  void extend(std::size_t depth) {
    const int v = order_[depth];
    char* used = marks_.data() + depth * q_;
    std::fill(used, used + q_, 0);
    int distinct = 0;
    for (int u : g_.neighbors(v)) {
      const int c = color_[u];
      if (c >= 0 && !used[c]) {
        used[c] = 1;
        ++distinct;
      }
    }
    if (depth + 1 == order_.size()) {
      total_ += static_cast<unsigned>(q_ - distinct);
      return;
    }
    for (int c = 0; c < q_; ++c) {
      if (used[c]) continue;
      color_[v] = c;
      extend(depth + 1);
    }
    color_[v] = -1;
  }

  const Graph& g_;
  int q_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<char> marks_;
  std::uint64_t total_ = 0;
};

class HomCounter {
 public:
  HomCounter(const Graph& g, const TargetGraph& h) : g_(g), h_(h), order_(bfs_order(g)) {
    image_.assign(g.order(), -1);
    // Suffix of the order that is an independent set: once reached, its vertices
    // only see assigned neighbours and contribute independent factors.
    tail_start_ = order_.size();
    VertexSet tail;
    while (tail_start_ > 0) {
      const int v = order_[tail_start_ - 1];
      if (g_.neighbors(v).intersects(tail)) break;
      tail.insert(v);
      --tail_start_;
    }
  }

  BigCount run() {
    if (g_.order() == 0) return 1;
    total_ = 0;
    extend(0);
    return total_;
  }

 private:
  VertexSet candidates(int v) const {
    VertexSet c = VertexSet::range(h_.order());
    for (int u : g_.neighbors(v))
      if (image_[u] >= 0) c &= h_.neighbors(image_[u]);
    return c;
  }

  void extend(std::size_t depth) {
    if (depth == tail_start_) {
      BigCount product = 1;
      for (std::size_t i = depth; i < order_.size(); ++i) {
        const int size = candidates(order_[i]).size();
        if (size == 0) return;
        product *= size;
      }
      total_ += product;
      return;
    }
    const int v = order_[depth];
    for (int x : candidates(v)) {
      image_[v] = x;
      extend(depth + 1);
    }
    image_[v] = -1;
  }

  const Graph& g_;
  const TargetGraph& h_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::size_t tail_start_ = 0;
  BigCount total_;
};

BigCount independent_sets_within(const Graph& g, VertexSet s,
                                 std::unordered_map<std::uint64_t, BigCount>& memo) {
  if (s.empty()) return 1;
  if (auto it = memo.find(s.bits()); it != memo.end()) return it->second;

  int pivot = -1;
  int best_degree = -1;
  for (int v : s) {
    const int deg = (g.neighbors(v) & s).size();
    if (deg > best_degree) {
      best_degree = deg;
      pivot = v;
    }
  }
  BigCount result;
  if (best_degree == 0) {
    result = BigCount(1) << s.size();
  } else {
    // Split off the pivot's component when the rest is disconnected from it.
    VertexSet comp{pivot};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = (g.neighborhood(frontier) & s) - comp;
      comp |= frontier;
    }
    if (comp != s) {
      result = independent_sets_within(g, comp, memo) * independent_sets_within(g, s - comp, memo);
    } else {
      VertexSet without = s;
      without.erase(pivot);
      result = independent_sets_within(g, without, memo) +
               independent_sets_within(g, without - g.neighbors(pivot), memo);
    }
  }
  memo.emplace(s.bits(), result);
  return result;
}

class IndependenceSearch {
 public:
  explicit IndependenceSearch(const Graph& g) : g_(g) {}

  int run(VertexSet within) {
    best_ = 0;
    expand(within, 0);
    return best_;
  }

 private:
  // Greedy partition of p into cliques of g; an independent set meets each at most once.
  int clique_cover_bound(VertexSet p) const {
    int cliques = 0;
    while (!p.empty()) {
      VertexSet candidates = p;
      while (!candidates.empty()) {
        const int v = candidates.first();
        p.erase(v);
        candidates &= g_.neighbors(v);
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(VertexSet p, int size) {
    // Vertices of degree <= 1 inside p belong to some maximum independent set.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (int v : p) {
        if ((g_.neighbors(v) & p).size() <= 1) {
          p -= g_.neighbors(v);
          p.erase(v);
          ++size;
          reduced = true;
          break;
        }
      }
    }
    if (p.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(p) <= best_) return;

    int pivot = -1;
    int best_degree = -1;
    for (int v : p) {
      const int deg = (g_.neighbors(v) & p).size();
      if (deg > best_degree) {
        best_degree = deg;
        pivot = v;
      }
    }
    VertexSet take = p - g_.neighbors(pivot);
    take.erase(pivot);
    expand(take, size + 1);
    VertexSet skip = p;
    skip.erase(pivot);
    expand(skip, size);
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace

BigCount count_colorings(const Graph& g, int q, ColoringMethod method) {
  if (q < 0) throw InvalidParameter("count_colorings: q must be >= 0");
  if (method == ColoringMethod::polynomial) return chromatic_polynomial(g).evaluate(q);
  if (g.order() == 0) return 1;
  if (q == 0) return 0;
  const auto parts = components(g);
  if (parts.size() == 1) return ColoringCounter(g, q).run();
  BigCount total = 1;
  for (VertexSet comp : parts) {
    total *= ColoringCounter(induced_subgraph(g, comp), q).run();
    if (total == 0) break;
  }
  return total;
}

BigCount count_homomorphisms(const Graph& g, const TargetGraph& h) {
  if (g.order() == 0) return 1;
  BigCount total = 1;
  for (VertexSet comp : components(g)) {
    total *= HomCounter(induced_subgraph(g, comp), h).run();
    if (total == 0) break;
  }
  return total;
}

BigCount count_homomorphisms_complete_bipartite(int a, int b, const TargetGraph& h) {
  if (a < 1 || b < 1) throw InvalidParameter("complete bipartite sides must be >= 1");
  const int k = h.order();
  if (k > 24) return count_homomorphisms(complete_bipartite(a, b), h);
  // The first side maps onto exactly the image set X; each second-side vertex
  // then picks any common neighbour of X.
  std::vector<BigCount> onto(k + 1);
  for (int s = 0; s <= k; ++s) {
    BigCount sum = 0;
    for (int i = 0; i <= s; ++i) {
      BigCount term = binomial(s, i) * power(BigInt(s - i), static_cast<unsigned>(a));
      sum += (i % 2 == 0) ? term : BigCount(-term);
    }
    onto[s] = sum;
  }
  BigCount total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    const VertexSet image(mask);
    if (image.size() > a) continue;
    VertexSet common = VertexSet::range(k);
    for (int x : image) common &= h.neighbors(x);
    if (common.empty()) continue;
    total += onto[image.size()] * power(BigInt(common.size()), static_cast<unsigned>(b));
  }
  return total;
}

BigCount count_independent_sets(const Graph& g) {
  std::unordered_map<std::uint64_t, BigCount> memo;
  return independent_sets_within(g, g.vertices(), memo);
}

int independence_number(const Graph& g, VertexSet within) {
  if (!within.subset_of(g.vertices())) throw InvalidParameter("independence_number: vertex out of range");
  return IndependenceSearch(g).run(within);
}

int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

VertexSet lexfirst_maximum_independent_set(const Graph& g) {
  IndependenceSearch search(g);
  int remaining = search.run(g.vertices());
  VertexSet chosen;
  VertexSet open = g.vertices();
  for (int v = 0; v < g.order() && remaining > 0; ++v) {
    if (!open.contains(v)) continue;
    VertexSet after = open - g.neighbors(v) - VertexSet::range(v + 1);
    if (1 + search.run(after) == remaining) {
      chosen.insert(v);
      open = after;
      --remaining;
    } else {
      open.erase(v);
    }
  }
  return chosen;
}

std::vector<std::pair<int, int>> greedy_maximal_matching(const Graph& g) {
  std::vector<std::pair<int, int>> matching;
  VertexSet matched;
  for (auto [u, v] : g.edges()) {
    if (matched.contains(u) || matched.contains(v)) continue;
    matching.emplace_back(u, v);
    matched.insert(u);
    matched.insert(v);
  }
  return matching;
}

}  // namespace chroma
