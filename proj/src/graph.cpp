#include "uleq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uleq {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n > 0 ? n : 0) {
  if (n < 1) throw std::invalid_argument("graph order must be positive, got " + std::to_string(n));
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    Edge e{std::min(u, v), std::max(u, v)};
    if (!edges_.insert(e).second) {
      throw std::invalid_argument("repeated edge {" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + "}");
    }
  }
  for (auto [u, v] : edges_) {
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return Graph(n, e);
}

Graph Graph::star(int n) {
  std::vector<Edge> e;
  for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
  return Graph(n, e);
}

bool Graph::has_edge(int u, int v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
  std::vector<Edge> all(edges_.begin(), edges_.end());
  for (auto [u, v] : extra) {
    if (has_edge(u, v)) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} already present");
    }
    all.emplace_back(u, v);
  }
  return Graph(n_, all);
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
  if (static_cast<int>(new_label.size()) != n_) throw std::invalid_argument("relabeling has wrong length");
  std::vector<bool> seen(n_, false);
  for (int l : new_label) {
    if (l < 1 || l > n_ || seen[l - 1]) throw std::invalid_argument("relabeling is not a permutation");
    seen[l - 1] = true;
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(new_label[u - 1], new_label[v - 1]);
  return Graph(n_, e);
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> id(n_, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 1; s <= n_; ++s) {
    if (id[s - 1] >= 0) continue;
    id[s - 1] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        if (id[w - 1] < 0) {
          id[w - 1] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

int Graph::component_count() const {
  auto ids = component_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 1; v <= n_; ++v) d[v - 1] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix L(g.order());
  for (int v = 1; v <= g.order(); ++v) L.set(v - 1, v - 1, g.degree(v));
  for (auto [u, v] : g.edges()) L.set(u - 1, v - 1, -1.0);
  return L;
}

Rational average_degree(const Graph& g) { return Rational(2 * g.size(), g.order()); }

GraphClass classify(const Graph& g) {
  const int c = g.component_count();
  const int n = g.order();
  const int m = g.size();
  if (c == 1 && m == n - 1) return GraphClass::tree;
  if (c == 1 && m == n) return GraphClass::unicyclic;
  // A graph is acyclic iff m = n - c.
  if (c > 1 && m == n - c) return GraphClass::forest;
  return GraphClass::other;
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::tree: return "tree";
    case GraphClass::unicyclic: return "unicyclic";
    case GraphClass::forest: return "forest";
    case GraphClass::other: return "other";
  }
  return "other";
}

std::optional<StarlikeShape> is_starlike(const Graph& g) {
  if (classify(g) != GraphClass::tree) return std::nullopt;
  int center = 0;
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) >= 3) {
      if (center != 0) return std::nullopt;
      center = v;
    }
  }
  if (center == 0) return std::nullopt;

  StarlikeShape shape;
  shape.center = center;
  for (int first : g.neighbors(center)) {
    int prev = center, cur = first, length = 1;
    while (g.degree(cur) == 2) {
      const auto& nb = g.neighbors(cur);
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++length;
    }
    shape.branches.push_back(length);
  }
  std::sort(shape.branches.begin(), shape.branches.end());
  return shape;
}

std::optional<int> unique_cycle_length(const Graph& g) {
  if (classify(g) != GraphClass::unicyclic) return std::nullopt;
  // Strip leaves until only the cycle remains.
  std::vector<int> deg(g.order());
  std::vector<int> leaves;
  for (int v = 1; v <= g.order(); ++v) {
    deg[v - 1] = g.degree(v);
    if (deg[v - 1] == 1) leaves.push_back(v);
  }
  int removed = 0;
  while (!leaves.empty()) {
    int v = leaves.back();
    leaves.pop_back();
    ++removed;
    deg[v - 1] = 0;
    for (int w : g.neighbors(v)) {
      if (deg[w - 1] > 0 && --deg[w - 1] == 1) leaves.push_back(w);
    }
  }
  return g.order() - removed;
}

}  // namespace uleq
