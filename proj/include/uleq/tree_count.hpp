#pragma once

#include <vector>

#include "uleq/graph.hpp"
#include "uleq/rational.hpp"

namespace uleq {

/// A tree with a chosen root and a bottom-up processing order (every vertex
/// appears before its parent; the root comes last).
class RootedTree {
 public:
  /// Throws std::invalid_argument if g is not a tree or root is not a vertex.
  RootedTree(Graph g, int root);

  const Graph& underlying() const { return g_; }
  int root() const { return root_; }
  /// Parent of v, 0 for the root.
  int parent(int v) const { return parent_[v - 1]; }
  /// Children of v in increasing label order.
  const std::vector<int>& children(int v) const { return children_[v - 1]; }
  const std::vector<int>& order() const { return order_; }

 private:
  Graph g_;
  int root_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> order_;
};

struct LocateResult {
  /// values[v-1] is the final a(v).
  std::vector<Rational> values;
  int above = 0;  // eigenvalues > alpha
  int equal = 0;  // eigenvalues == alpha
  int below = 0;  // eigenvalues < alpha
  /// Edges {child, parent} removed when a zero child was absorbed.
  std::vector<Edge> cut_edges;
};

/// Counts the Laplacian eigenvalues of a tree above, at and below alpha by
/// diagonalizing L - alpha I bottom-up along the tree, in exact arithmetic.
///
/// Each vertex starts at deg(v) - alpha. Processing v:
///   - no child is zero: a(v) -= sum over children of 1 / a(child);
///   - some child is zero: the lowest-labeled such child c gets a(c) = 2,
///     a(v) = -1/2, and unless v is the root the edge to its parent is
///     dropped, so the parent ignores v.
/// The signs of the final values give the counts.
LocateResult jt_locate(const RootedTree& t, const Rational& alpha);

/// Number of Laplacian eigenvalues >= the average degree 2 - 2/n of a tree.
/// Throws std::invalid_argument if g is not a tree.
int sigma_tree(const Graph& g);

/// Number of Laplacian eigenvalues >= average degree of a connected graph.
/// Trees use sigma_tree; other graphs count the dense spectrum, treating
/// mu >= avg - 1e-9 as meeting the average. Throws std::invalid_argument on
/// a disconnected graph.
int sigma_graph(const Graph& g);

}  // namespace uleq
