#include "uleq/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "uleq/graph_io.hpp"

namespace uleq {

WStructure build_w(const Graph& gstar, const Graph& gbreve, int root, const BinaryVector& y) {
  const int k = gstar.order();
  if (static_cast<int>(y.size()) != k) {
    throw std::invalid_argument("adjacency vector has length " + std::to_string(y.size()) + " but |G*| = " +
                                std::to_string(k));
  }
  if (root < 1 || root > gbreve.order()) {
    throw std::invalid_argument("root " + std::to_string(root) + " is not a vertex of the rooted block");
  }
  const int n = 2 * k + gbreve.order();

  // Ğ vertex -> canonical label.
  std::vector<int> breve_label(gbreve.order());
  breve_label[root - 1] = 2 * k + 1;
  int next = 2 * k + 2;
  for (int v = 1; v <= gbreve.order(); ++v) {
    if (v != root) breve_label[v - 1] = next++;
  }

  std::vector<Edge> edges;
  edges.reserve(2 * gstar.size() + gbreve.size() + 2 * k);
  for (auto [u, v] : gstar.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(k + u, k + v);
  }
  for (auto [u, v] : gbreve.edges()) edges.emplace_back(breve_label[u - 1], breve_label[v - 1]);
  for (int i = 1; i <= k; ++i) {
    if (y[i - 1]) {
      edges.emplace_back(i, 2 * k + 1);
      edges.emplace_back(k + i, 2 * k + 1);
    }
  }

  WStructure w;
  w.gstar = gstar;
  w.gbreve = gbreve;
  w.root = root;
  w.y = y;
  w.assembled = Graph(n, edges);
  return w;
}

Graph apply_ez(const WStructure& w, const BinaryVector& z) {
  const int k = w.k();
  if (static_cast<int>(z.size()) != k) {
    throw std::invalid_argument("characteristic vector has length " + std::to_string(z.size()) + ", expected " +
                                std::to_string(k));
  }
  std::vector<Edge> extra;
  for (int i = 1; i <= k; ++i) {
    if (z[i - 1]) extra.emplace_back(i, k + i);
  }
  return w.assembled.with_edges(extra);
}

int StarlikeSpec::order() const { return 1 + std::accumulate(branch_lengths.begin(), branch_lengths.end(), 0); }

std::string starlike_violation(const StarlikeSpec& spec, bool enforce_odd_bound) {
  const auto& a = spec.branch_lengths;
  const int h = static_cast<int>(a.size());
  if (h < 3) return "needs at least 3 branches, got " + std::to_string(h);
  for (int i = 0; i < h; ++i) {
    if (a[i] < 1) return "branch " + std::to_string(i + 1) + " has non-positive length";
  }
  for (int i = 0; i + 1 < h; ++i) {
    if (a[i] % 2 != 0) return "branch " + std::to_string(i + 1) + " (length " + std::to_string(a[i]) + ") must be even";
  }
  if (a[0] != a[1]) return "first two branches must have equal length k";
  if (a[0] < 2) return "k must be at least 2";
  if (a[h - 1] % 2 == 0) return "last branch (length " + std::to_string(a[h - 1]) + ") must be odd";
  const int n = spec.order();
  if (enforce_odd_bound && 2 * a[h - 1] >= n) {
    return "odd branch length " + std::to_string(a[h - 1]) + " must be below n/2 = " + std::to_string(n / 2);
  }
  return {};
}

Graph build_starlike(const StarlikeSpec& spec, bool enforce_odd_bound) {
  if (auto why = starlike_violation(spec, enforce_odd_bound); !why.empty()) {
    throw std::invalid_argument("invalid starlike spec: " + why);
  }
  std::vector<Edge> edges;
  int next = 2;
  for (int len : spec.branch_lengths) {
    edges.emplace_back(1, next);
    for (int j = 1; j < len; ++j) edges.emplace_back(next + j - 1, next + j);
    next += len;
  }
  return Graph(spec.order(), edges);
}

WStructure s_as_w(const Graph& g, int k) {
  const auto shape = is_starlike(g);
  if (!shape) throw std::invalid_argument("graph is not a starlike tree");
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int center = shape->center;

  // Vertices of each branch listed outward from the center.
  std::vector<std::vector<int>> chosen;
  for (int first : g.neighbors(center)) {
    std::vector<int> branch{first};
    int prev = center, cur = first;
    while (g.degree(cur) == 2) {
      const auto& nb = g.neighbors(cur);
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      branch.push_back(cur);
    }
    if (static_cast<int>(branch.size()) == k) {
      chosen.push_back(std::move(branch));
      if (chosen.size() == 2) break;
    }
  }
  if (chosen.size() < 2) {
    throw std::invalid_argument("starlike tree has fewer than two branches with " + std::to_string(k) + " vertices");
  }

  const int n = g.order();
  std::vector<bool> in_copy(n, false);
  for (const auto& b : chosen)
    for (int v : b) in_copy[v - 1] = true;

  // Remaining vertices keep their relative order in Ğ.
  std::vector<int> rest;
  std::vector<int> breve_index(n, 0);
  for (int v = 1; v <= n; ++v) {
    if (!in_copy[v - 1]) {
      rest.push_back(v);
      breve_index[v - 1] = static_cast<int>(rest.size());
    }
  }
  std::vector<Edge> breve_edges;
  for (auto [u, v] : g.edges()) {
    if (!in_copy[u - 1] && !in_copy[v - 1]) breve_edges.emplace_back(breve_index[u - 1], breve_index[v - 1]);
  }
  Graph gbreve(static_cast<int>(rest.size()), breve_edges);
  const int root = breve_index[center - 1];

  WStructure w = build_w(Graph::path(k), gbreve, root, unit_vector(k, k));

  // P_k label i sits k - i steps out from the center's neighbor.
  w.source_label.assign(n, 0);
  for (int i = 1; i <= k; ++i) {
    w.source_label[i - 1] = chosen[0][k - i];
    w.source_label[k + i - 1] = chosen[1][k - i];
  }
  w.source_label[2 * k] = center;
  int next = 2 * k + 2;
  for (int v : rest) {
    if (v != center) w.source_label[next++ - 1] = v;
  }
  return w;
}

std::string to_string(const Placement& p) {
  if (p.kind == Placement::Kind::grow_odd_branch) return "grow-odd-branch";
  std::string s = "add-even-branches(";
  for (std::size_t i = 0; i < p.extra_branches.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.extra_branches[i]);
  }
  return s + ")";
}

std::vector<Graph> EquienergeticFamily::graphs() const {
  std::vector<Graph> all{base};
  all.insert(all.end(), members.begin(), members.end());
  return all;
}

EquienergeticFamily generate_family(int ell, int gamma, const Placement& placement) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  if (gamma < 1) throw std::invalid_argument("gamma must be at least 1");
  const int n = 2 * ell * ell + 2 * ell + 2 * gamma;
  const int extra = 2 * (gamma - 1);

  std::vector<int> even;
  for (int i = 1; i <= ell; ++i) {
    even.push_back(2 * i);
    even.push_back(2 * i);
  }
  int odd = 1;

  Placement resolved = placement;
  if (placement.kind == Placement::Kind::grow_odd_branch) {
    odd += extra;
  } else {
    if (resolved.extra_branches.empty()) resolved.extra_branches.assign(gamma - 1, 2);
    int total = 0;
    for (int len : resolved.extra_branches) {
      if (len < 2 || len % 2 != 0) {
        throw std::invalid_argument("extra branch length " + std::to_string(len) + " must be even and positive");
      }
      total += len;
    }
    if (total != extra) {
      throw std::invalid_argument("extra branches hold " + std::to_string(total) + " vertices, expected 2(gamma-1) = " +
                                  std::to_string(extra));
    }
    even.insert(even.end(), resolved.extra_branches.begin(), resolved.extra_branches.end());
  }
  if (2 * odd >= n) {
    throw std::invalid_argument("placement makes the odd branch " + std::to_string(odd) + " reach n/2 = " +
                                std::to_string(n / 2));
  }
  std::sort(even.begin(), even.end());

  EquienergeticFamily family;
  family.ell = ell;
  family.gamma = gamma;
  family.placement = resolved;
  family.base_spec.branch_lengths = even;
  family.base_spec.branch_lengths.push_back(odd);
  family.base = build_starlike(family.base_spec);

  for (int i = 1; i <= ell; ++i) {
    const WStructure w = s_as_w(family.base, 2 * i);
    const Graph canonical = apply_ez(w, unit_vector(2 * i, 1));
    // Canonical label c corresponds to base label source_label[c-1].
    family.members.push_back(canonical.relabeled(w.source_label));
  }
  return family;
}

void write_family(const std::filesystem::path& dir, const EquienergeticFamily& family) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest;
  manifest["ell"] = family.ell;
  manifest["gamma"] = family.gamma;
  manifest["placement"] = to_string(family.placement);
  manifest["n"] = family.order();
  manifest["branches"] = family.base_spec.branch_lengths;
  nlohmann::json graphs = nlohmann::json::array();

  auto record = [&](const std::string& name, const Graph& g) {
    const std::string file = name + ".txt";
    save_edge_list(dir / file, g);
    nlohmann::json entry{{"name", name}, {"file", file}, {"class", to_string(classify(g))}, {"edges", g.size()}};
    if (auto len = unique_cycle_length(g)) {
      entry["cycle_length"] = *len;
    } else {
      entry["cycle_length"] = nullptr;
    }
    graphs.push_back(entry);
  };
  record("base", family.base);
  for (std::size_t i = 0; i < family.members.size(); ++i) record("G" + std::to_string(i + 1), family.members[i]);
  manifest["graphs"] = graphs;

  std::ofstream out(dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
  out << manifest.dump(2) << '\n';
}

}  // namespace uleq
