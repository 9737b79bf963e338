#include "chroma/chromatic_polynomial.hpp"

#include <map>
#include <sstream>

#include "chroma/canonical.hpp"
#include "chroma/errors.hpp"

namespace chroma {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(long long c) { return Polynomial({BigInt(c)}); }

Polynomial Polynomial::monomial(int k) {
  std::vector<BigInt> c(k + 1, 0);
  c[k] = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::falling_factorial(int k) {
  Polynomial p = constant(1);
  for (int i = 0; i < k; ++i) p = p * Polynomial({BigInt(-i), BigInt(1)});
  return p;
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

BigInt Polynomial::evaluate(long long q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0 && !(first && k == 0)) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "q";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

namespace {

/// Merges v into u and drops v, keeping the remaining vertices in order.
Graph contract(const Graph& g, int u, int v) {
  std::vector<VertexSet> rows = g.rows();
  for (int w : rows[v]) {
    if (w == u) continue;
    rows[u].insert(w);
    rows[w].insert(u);
  }
  for (int w : rows[v]) rows[w].erase(v);
  rows[v] = VertexSet{};
  Graph merged = Graph::from_rows(std::move(rows));
  VertexSet keep = merged.vertices();
  keep.erase(v);
  return induced_subgraph(merged, keep);
}

Graph toggle_edge(const Graph& g, int u, int v) {
  std::vector<VertexSet> rows = g.rows();
  if (rows[u].contains(v)) {
    rows[u].erase(v);
    rows[v].erase(u);
  } else {
    rows[u].insert(v);
    rows[v].insert(u);
  }
  return Graph::from_rows(std::move(rows));
}

class DeletionContraction {
 public:
  Polynomial solve(const Graph& g) {
    const int n = g.order();
    if (n == 0) return Polynomial::constant(1);
    const int m = g.edge_count();
    if (m == 0) return Polynomial::monomial(n);

    const auto comps = components(g);
    if (comps.size() > 1) {
      Polynomial p = Polynomial::constant(1);
      for (VertexSet c : comps) p = p * solve(induced_subgraph(g, c));
      return p;
    }

    // A vertex whose neighbourhood is a clique of size k contributes a factor (q - k).
    for (int v = 0; v < n; ++v) {
      const VertexSet nb = g.neighbors(v);
      bool clique = true;
      for (int u : nb) {
        VertexSet others = nb;
        others.erase(u);
        if (!others.subset_of(g.neighbors(u))) {
          clique = false;
          break;
        }
      }
      if (!clique) continue;
      VertexSet rest = g.vertices();
      rest.erase(v);
      return Polynomial({BigInt(-nb.size()), BigInt(1)}) * solve(induced_subgraph(g, rest));
    }

    CanonicalForm key = canonical_form(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Polynomial result;
    if (4 * m > n * (n - 1)) {
      // Dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv.
      int u = 0;
      for (int w = 0; w < n; ++w)
        if (g.degree(w) < n - 1 && (g.degree(u) == n - 1 || g.degree(w) > g.degree(u))) u = w;
      VertexSet non = g.vertices() - g.neighbors(u);
      non.erase(u);
      const int v = non.first();
      result = solve(toggle_edge(g, u, v)) + solve(contract(g, u, v));
    } else {
      // Sparse: P(G) = P(G - uv) - P(G / uv), deleting at a minimum-degree vertex.
      int u = 0;
      for (int w = 1; w < n; ++w)
        if (g.degree(w) < g.degree(u)) u = w;
      const int v = g.neighbors(u).first();
      result = solve(toggle_edge(g, u, v)) - solve(contract(g, u, v));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<CanonicalForm, Polynomial> memo_;
};

}  // namespace

Polynomial chromatic_polynomial(const Graph& g, int cap) {
  if (g.order() > cap)
    throw CapExceeded("chromatic_polynomial: n = " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  return DeletionContraction().solve(g);
}

}  // namespace chroma
