#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "uleq/graph.hpp"
#include "uleq/spectra.hpp"

namespace uleq {

/// A graph G(G*, Ğ, y) together with the decomposition that produced it.
///
/// Canonical labeling of `assembled`: the two copies of G* occupy 1..k and
/// k+1..2k (copy label i and k+i both come from G* vertex i), the root of Ğ is
/// 2k+1 and the other Ğ vertices follow in increasing Ğ label order.
struct WStructure {
  Graph gstar;
  Graph gbreve;
  int root = 0;  // vertex of gbreve
  BinaryVector y;
  Graph assembled;
  /// When the structure was read off an existing graph (s_as_w), the label
  /// each canonical vertex had there; empty otherwise.
  std::vector<int> source_label;

  int k() const { return gstar.order(); }
  int n() const { return assembled.order(); }
};

/// Throws std::invalid_argument on |y| != |gstar| or a root outside gbreve.
WStructure build_w(const Graph& gstar, const Graph& gbreve, int root, const BinaryVector& y);

/// Inserts {i, k+i} for every z_i = 1. Result uses the canonical labeling.
/// Throws std::invalid_argument if |z| != k or an inserted edge already exists.
Graph apply_ez(const WStructure& w, const BinaryVector& z);

/// Branch lengths (vertex counts) of a starlike tree in S_{n,k}: all even
/// but the last, which is odd and shorter than n/2, with a_1 = a_2 = k >= 2.
struct StarlikeSpec {
  std::vector<int> branch_lengths;

  int k() const { return branch_lengths.empty() ? 0 : branch_lengths.front(); }
  int order() const;
  int odd_branch() const { return branch_lengths.empty() ? 0 : branch_lengths.back(); }
};

/// Description of the first violated constraint, empty when `spec` is valid.
/// With enforce_odd_bound = false the a_h < n/2 condition is skipped.
std::string starlike_violation(const StarlikeSpec& spec, bool enforce_odd_bound = true);

/// Center is vertex 1; branch i follows as a path, its vertex nearest the
/// center first. Throws std::invalid_argument naming the failed constraint.
Graph build_starlike(const StarlikeSpec& spec, bool enforce_odd_bound = true);

/// View a starlike tree with two branches of k vertices as G(P_k, Ğ, e_k).
/// The two lowest-labeled neighbors of the center heading k-branches form
/// the copies of P_k; P_k label 1 is the leaf end. Throws
/// std::invalid_argument if g is not starlike or has fewer than two such
/// branches.
WStructure s_as_w(const Graph& g, int k);

/// Where the 2(gamma - 1) extra vertices of the family's base tree go.
struct Placement {
  enum class Kind { add_even_branches, grow_odd_branch };
  Kind kind = Kind::add_even_branches;
  /// Even lengths summing to 2(gamma - 1); empty means gamma - 1 paths P_2.
  std::vector<int> extra_branches;

  static Placement even(std::vector<int> extra = {}) { return {Kind::add_even_branches, std::move(extra)}; }
  static Placement odd() { return {Kind::grow_odd_branch, {}}; }
};

std::string to_string(const Placement& p);

/// Base tree G on n = 2 ell^2 + 2 ell + 2 gamma vertices and the unicyclic
/// graphs G_i = E_{e_1}(G) taken with G viewed in S_{n,2i}, i = 1..ell.
struct EquienergeticFamily {
  int ell = 0;
  int gamma = 0;
  Placement placement;
  StarlikeSpec base_spec;
  Graph base;
  /// members[i-1] is G_i, in the labeling of `base` (one extra edge).
  std::vector<Graph> members;

  int order() const { return base.order(); }
  /// [G, G_1, ..., G_ell]
  std::vector<Graph> graphs() const;
};

/// Even branches are attached in ascending length, the odd branch last.
/// Throws std::invalid_argument on ell < 2, gamma < 1, or a placement that is
/// inconsistent with gamma or pushes the odd branch to n/2 or beyond.
EquienergeticFamily generate_family(int ell, int gamma, const Placement& placement = Placement::even());

/// Writes base.txt, G1.txt .. G<ell>.txt (edge-list format) and
/// manifest.json into dir, creating it if needed.
void write_family(const std::filesystem::path& dir, const EquienergeticFamily& family);

}  // namespace uleq
