#include "chroma/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "chroma/canonical.hpp"
#include "chroma/errors.hpp"

namespace chroma {

int enumeration_cap() {
  if (const char* env = std::getenv("CHROMA_CAP_N")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) return std::min(cap, kMaxVertices);
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumerationCap;
}

namespace {

/// Fills adjacency rows in vertex order. When row v picks its remaining
/// neighbours among later vertices, later vertices with the same adjacency
/// to 0..v-1 are interchangeable, so only prefixes of each such class are tried.
class RowFiller {
 public:
  RowFiller(int n, int d, bool connected_only) : n_(n), d_(d), connected_only_(connected_only), rows_(n) {}

  std::set<CanonicalForm> run() {
    fill(0);
    return std::move(seen_);
  }

 private:
  void fill(int v) {
    if (v == n_) {
      Graph g = Graph::from_rows(rows_);
      if (connected_only_ && components(g).size() > 1) return;
      seen_.insert(canonical_form(g));
      return;
    }
    const int need = d_ - rows_[v].size();
    const VertexSet earlier = VertexSet::range(v);

    std::vector<std::vector<int>> classes;
    std::vector<VertexSet> keys;
    int available = 0;
    for (int w = v + 1; w < n_; ++w) {
      if (rows_[w].size() >= d_) continue;
      const VertexSet key = rows_[w] & earlier;
      auto it = std::find(keys.begin(), keys.end(), key);
      if (it == keys.end()) {
        keys.push_back(key);
        classes.push_back({w});
      } else {
        classes[it - keys.begin()].push_back(w);
      }
      ++available;
    }
    if (need > available) return;
    choose(v, classes, 0, need);
  }

  void choose(int v, const std::vector<std::vector<int>>& classes, std::size_t c, int need) {
    if (need == 0) {
      fill(v + 1);
      return;
    }
    if (c == classes.size()) return;
    int rest = 0;
    for (std::size_t i = c + 1; i < classes.size(); ++i) rest += static_cast<int>(classes[i].size());
    const int size = static_cast<int>(classes[c].size());
    for (int take = std::min(size, need); take >= 0; --take) {
      if (need - take > rest) break;
      for (int i = 0; i < take; ++i) link(v, classes[c][i]);
      choose(v, classes, c + 1, need - take);
      for (int i = 0; i < take; ++i) unlink(v, classes[c][i]);
    }
  }

  void link(int a, int b) {
    rows_[a].insert(b);
    rows_[b].insert(a);
  }
  void unlink(int a, int b) {
    rows_[a].erase(b);
    rows_[b].erase(a);
  }

  int n_;
  int d_;
  bool connected_only_;
  std::vector<VertexSet> rows_;
  std::set<CanonicalForm> seen_;
};

Graph from_form(const CanonicalForm& f) {
  std::vector<VertexSet> rows;
  for (auto r : f.rows) rows.emplace_back(r);
  return Graph::from_rows(std::move(rows));
}

}  // namespace

std::vector<Graph> enumerate_regular(int n, int d, const EnumerationOptions& options) {
  const int cap = options.cap;
  if (n < 1 || d < 0) throw InvalidParameter("enumerate_regular: need n >= 1 and d >= 0");
  if (n > cap)
    throw CapExceeded("enumerate_regular: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (d >= n || (n * d) % 2 != 0) return {};

  std::set<CanonicalForm> forms;
  if (2 * d > n - 1) {
    // Dense case via complements of (n-1-d)-regular graphs.
    for (const CanonicalForm& f : RowFiller(n, n - 1 - d, false).run()) {
      Graph g = complement(from_form(f));
      if (options.connected_only && components(g).size() > 1) continue;
      forms.insert(canonical_form(g));
    }
  } else {
    forms = RowFiller(n, d, options.connected_only).run();
  }
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const CanonicalForm& f : forms) out.push_back(from_form(f));
  return out;
}

Graph random_regular(int n, int d, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices || d < 0 || d >= n || (n * d) % 2 != 0)
    throw InvalidParameter("random_regular: no d-regular graph with these parameters");
  std::vector<int> points;
  for (;;) {
    points.clear();
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) points.push_back(v);
    std::vector<VertexSet> rows(n);
    bool ok = true;
    // Pair points one at a time, resampling partners that would create a loop or multi-edge.
    while (!points.empty() && ok) {
      const int a = points.back();
      points.pop_back();
      ok = false;
      for (int attempt = 0; attempt < 50 && !points.empty(); ++attempt) {
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        const std::size_t idx = pick(rng);
        const int b = points[idx];
        if (b == a || rows[a].contains(b)) continue;
        rows[a].insert(b);
        rows[b].insert(a);
        points[idx] = points.back();
        points.pop_back();
        ok = true;
        break;
      }
    }
    if (ok) return Graph::from_rows(std::move(rows));
  }
}

}  // namespace chroma
