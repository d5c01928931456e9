#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uleq/rational.hpp"

namespace uleq {

/// Normalized undirected edge {first, second} with first < second (1-based).
using Edge = std::pair<int, int>;

/// Immutable labeled simple undirected graph on vertices 1..n.
///
/// The edge set is kept sorted, so two graphs compare equal exactly when
/// they have the same order and the same labeled edges.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on n < 1, an endpoint outside 1..n, a loop
  /// or a repeated pair.
  Graph(int n, const std::vector<Edge>& edges);

  static Graph path(int n);
  static Graph cycle(int n);
  /// Star on n vertices, center labeled 1.
  static Graph star(int n);
  static Graph empty(int n) { return Graph(n, {}); }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::set<Edge>& edges() const { return edges_; }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  /// Neighbors of v in increasing label order.
  const std::vector<int>& neighbors(int v) const { return adj_.at(v - 1); }
  bool has_edge(int u, int v) const;

  /// Copy of this graph with extra edges. Throws if any is already present.
  Graph with_edges(const std::vector<Edge>& extra) const;

  /// new_label[v-1] is the label vertex v receives; must be a permutation.
  Graph relabeled(const std::vector<int>& new_label) const;

  /// Component index (0-based) of each vertex, in order of lowest member.
  std::vector<int> component_ids() const;
  int component_count() const;
  bool connected() const { return component_count() == 1; }

  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Dense symmetric matrix, row-major full storage. Writes go through set(),
/// which mirrors the entry, so symmetry holds exactly.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order = 0)
      : order_(order), data_(static_cast<std::size_t>(order) * order, 0.0) {}

  int order() const { return order_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double value) {
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
  }
  void add(int i, int j, double delta) { set(i, j, (*this)(i, j) + delta); }

  double trace() const;
  double frobenius_norm() const;

  /// Row-major storage; 0-based (i, j) lives at i * order + j.
  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * order_ + j;
  }
  int order_;
  std::vector<double> data_;
};

/// L = D - A with 0-based indices (vertex v sits at row v - 1).
SymmetricMatrix laplacian(const Graph& g);

/// 2|E|/n, exact.
Rational average_degree(const Graph& g);

enum class GraphClass { tree, unicyclic, forest, other };

GraphClass classify(const Graph& g);
std::string to_string(GraphClass c);

/// Shape of a starlike tree: its unique vertex of degree >= 3 and the
/// vertex counts of the paths hanging from it, sorted ascending.
struct StarlikeShape {
  int center = 0;
  std::vector<int> branches;
};

std::optional<StarlikeShape> is_starlike(const Graph& g);

/// Length of the unique cycle of a unicyclic graph, nullopt otherwise.
std::optional<int> unique_cycle_length(const Graph& g);

}  // namespace uleq
