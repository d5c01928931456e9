#include "uleq/tree_count.hpp"

#include <stdexcept>

#include "uleq/spectra.hpp"

namespace uleq {

RootedTree::RootedTree(Graph g, int root)
    : g_(std::move(g)), root_(root), parent_(g_.order(), 0), children_(g_.order()) {
  if (classify(g_) != GraphClass::tree) throw std::invalid_argument("graph is not a tree");
  if (root < 1 || root > g_.order()) throw std::invalid_argument("root is not a vertex");

  // Iterative DFS; post-order gives children before parents.
  order_.reserve(g_.order());
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nb = g_.neighbors(v);
    if (next < nb.size()) {
      int w = nb[next++];
      if (w == parent_[v - 1]) continue;
      parent_[w - 1] = v;
      children_[v - 1].push_back(w);
      stack.emplace_back(w, 0);
    } else {
      order_.push_back(v);
      stack.pop_back();
    }
  }
}

LocateResult jt_locate(const RootedTree& t, const Rational& alpha) {
  const Graph& g = t.underlying();
  const int n = g.order();
  LocateResult r;
  r.values.resize(n);
  for (int v = 1; v <= n; ++v) r.values[v - 1] = Rational(g.degree(v)) - alpha;

  std::vector<bool> detached(n, false);  // edge to parent suppressed
  for (int v : t.order()) {
    int zero_child = 0;
    for (int c : t.children(v)) {
      if (!detached[c - 1] && r.values[c - 1] == 0) {
        zero_child = c;
        break;
      }
    }
    if (zero_child != 0) {
      r.values[v - 1] = Rational(-1, 2);
      r.values[zero_child - 1] = 2;
      if (v != t.root()) {
        detached[v - 1] = true;
        r.cut_edges.emplace_back(v, t.parent(v));
      }
      continue;
    }
    Rational acc = 0;
    for (int c : t.children(v)) {
      if (!detached[c - 1]) acc += 1 / r.values[c - 1];
    }
    r.values[v - 1] -= acc;
  }

  for (const auto& a : r.values) {
    if (a > 0) {
      ++r.above;
    } else if (a < 0) {
      ++r.below;
    } else {
      ++r.equal;
    }
  }
  return r;
}

int sigma_tree(const Graph& g) {
  if (classify(g) != GraphClass::tree) throw std::invalid_argument("sigma_tree needs a tree");
  const auto r = jt_locate(RootedTree(g, 1), average_degree(g));
  return r.above + r.equal;
}

int sigma_graph(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("sigma_graph needs a connected graph");
  if (classify(g) == GraphClass::tree) return sigma_tree(g);
  return count_at_least(laplacian_spectrum(g), to_double(average_degree(g)));
}

}  // namespace uleq
