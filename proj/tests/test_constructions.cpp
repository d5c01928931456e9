#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "uleq/constructions.hpp"
#include "uleq/graph_io.hpp"
#include "uleq/verify.hpp"

using namespace uleq;

TEST_CASE("build_w assembles the canonical labeling") {
  const WStructure w = build_w(Graph::path(3), Graph::cycle(5), 1, {1, 1, 1});
  CHECK(w.n() == 11);
  CHECK(w.k() == 3);
  // 2 * 2 path edges + 5 cycle edges + 2 * 3 attachments
  CHECK(w.assembled.size() == 15);
  CHECK(w.assembled.has_edge(1, 2));
  CHECK(w.assembled.has_edge(5, 6));
  CHECK(w.assembled.has_edge(3, 7));
  CHECK(w.assembled.has_edge(4, 7));
  CHECK(w.assembled.has_edge(7, 8));
  CHECK(w.assembled.has_edge(7, 11));
  CHECK(w.source_label.empty());

  const WStructure detached = build_w(Graph::path(3), Graph::cycle(5), 1, {0, 0, 0});
  CHECK(detached.assembled.component_count() == 3);

  CHECK_THROWS_AS(build_w(Graph::path(3), Graph::cycle(5), 1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_w(Graph::path(3), Graph::cycle(5), 6, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("build_w with a non-root first vertex") {
  // Root 3 of P_4 becomes 2k+1; vertices 1, 2, 4 follow in order.
  const WStructure w = build_w(Graph::path(2), Graph::path(4), 3, {0, 1});
  CHECK(w.n() == 8);
  CHECK(w.assembled.has_edge(2, 5));
  CHECK(w.assembled.has_edge(4, 5));
  CHECK(w.assembled.has_edge(6, 7));  // Ğ edge 1-2
  CHECK(w.assembled.has_edge(7, 5));  // Ğ edge 2-3
  CHECK(w.assembled.has_edge(5, 8));  // Ğ edge 3-4
}

TEST_CASE("order and size counts for arbitrary blocks") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const WStructure w = random_w_structure(rng, 5, 6);
    const int k = w.k();
    CHECK(w.n() == 2 * k + w.gbreve.order());
    CHECK(w.assembled.size() == 2 * w.gstar.size() + w.gbreve.size() + 2 * popcount(w.y));
  }
}

TEST_CASE("apply_ez") {
  const WStructure w = build_w(Graph::path(3), Graph::cycle(5), 1, {1, 1, 1});
  CHECK(apply_ez(w, {0, 0, 0}) == w.assembled);
  const Graph g = apply_ez(w, {1, 0, 1});
  CHECK(g.size() == w.assembled.size() + 2);
  CHECK(g.has_edge(1, 4));
  CHECK(g.has_edge(3, 6));
  CHECK_FALSE(g.has_edge(2, 5));
  CHECK_THROWS_AS(apply_ez(w, {1, 1}), std::invalid_argument);

  // Inserting an edge that already exists is rejected.
  const WStructure joined = build_w(Graph(2, {}), Graph(1, {}), 1, {1, 1});
  const Graph once = apply_ez(joined, {1, 0});
  WStructure again = joined;
  again.assembled = once;
  CHECK_THROWS_AS(apply_ez(again, {1, 0}), std::invalid_argument);
}

TEST_CASE("build_starlike") {
  const Graph t = build_starlike({{2, 2, 1}});
  CHECK(t == Graph(6, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}}));

  const Graph t16 = build_starlike({{4, 4, 2, 2, 3}});
  CHECK(t16.order() == 16);
  CHECK(classify(t16) == GraphClass::tree);
  CHECK(is_starlike(t16)->branches == std::vector<int>{2, 2, 3, 4, 4});

  const Graph t44 = build_starlike({{2, 2, 4, 4, 6, 6, 8, 8, 2, 1}});
  CHECK(t44.order() == 44);
  CHECK(t44.degree(1) == 10);
}

TEST_CASE("starlike spec violations") {
  CHECK(starlike_violation({{2, 2, 1}}).empty());
  CHECK_FALSE(starlike_violation({{2, 2}}).empty());
  CHECK_FALSE(starlike_violation({{2, 4, 1}}).empty());
  CHECK_FALSE(starlike_violation({{3, 3, 1}}).empty());
  CHECK_FALSE(starlike_violation({{2, 2, 2}}).empty());
  CHECK_FALSE(starlike_violation({{2, 2, 0, 1}}).empty());
  // odd branch 5 on n = 10 reaches n/2
  CHECK_FALSE(starlike_violation({{2, 2, 5}}).empty());
  CHECK(starlike_violation({{2, 2, 5}}, false).empty());
  CHECK_THROWS_AS(build_starlike({{2, 2, 5}}), std::invalid_argument);
  CHECK(build_starlike({{2, 2, 5}}, false).order() == 10);
}

TEST_CASE("s_as_w recovers the starlike tree") {
  const Graph t = build_starlike({{4, 4, 2, 2, 3}});
  for (int k : {2, 4}) {
    const WStructure w = s_as_w(t, k);
    CHECK(w.k() == k);
    CHECK(w.gstar == Graph::path(k));
    CHECK(w.y == unit_vector(k, k));
    REQUIRE(w.source_label.size() == 16u);
    CHECK(w.assembled.relabeled(w.source_label) == t);
    CHECK(w.source_label[2 * k] == 1);
    // label 1 of each copy is a leaf of t
    CHECK(t.degree(w.source_label[0]) == 1);
    CHECK(t.degree(w.source_label[k]) == 1);
    CHECK(w.assembled.degree(2 * k + 1) == 5);
  }
  CHECK_THROWS_AS(s_as_w(t, 3), std::invalid_argument);  // only one 3-branch
  CHECK_THROWS_AS(s_as_w(Graph::path(5), 2), std::invalid_argument);
  CHECK_THROWS_AS(s_as_w(Graph::cycle(5), 2), std::invalid_argument);
}

TEST_CASE("s_as_w on relabeled trees") {
  std::mt19937_64 rng(29);
  const Graph t = build_starlike({{2, 2, 4, 4, 1}});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> perm(t.order());
    for (int i = 0; i < t.order(); ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph shuffled = t.relabeled(perm);
    for (int k : {2, 4}) {
      const WStructure w = s_as_w(shuffled, k);
      CHECK(w.assembled.relabeled(w.source_label) == shuffled);
    }
  }
}

TEST_CASE("generate_family") {
  const auto fam = generate_family(4, 2);
  CHECK(fam.order() == 44);
  CHECK(fam.base_spec.branch_lengths == std::vector<int>{2, 2, 2, 4, 4, 6, 6, 8, 8, 1});
  CHECK(to_string(fam.placement) == "add-even-branches(2)");
  REQUIRE(fam.members.size() == 4u);
  for (int i = 1; i <= 4; ++i) {
    const Graph& g = fam.members[i - 1];
    CHECK(g.size() == fam.base.size() + 1);
    CHECK(classify(g) == GraphClass::unicyclic);
    CHECK(unique_cycle_length(g) == 4 * i + 1);
  }
  CHECK(fam.graphs().size() == 5u);

  const auto small = generate_family(2, 1);
  CHECK(small.order() == 14);
  CHECK(small.base_spec.branch_lengths == std::vector<int>{2, 2, 4, 4, 1});
  CHECK(to_string(small.placement) == "add-even-branches()");

  const auto odd = generate_family(2, 3, Placement::odd());
  CHECK(odd.order() == 18);
  CHECK(odd.base_spec.odd_branch() == 5);
  CHECK(to_string(odd.placement) == "grow-odd-branch");

  const auto custom = generate_family(3, 3, Placement::even({4}));
  CHECK(custom.base_spec.branch_lengths == std::vector<int>{2, 2, 4, 4, 4, 6, 6, 1});
}

TEST_CASE("generate_family rejects bad parameters") {
  CHECK_THROWS_AS(generate_family(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(2, 2, Placement::even({4})), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(2, 2, Placement::even({3})), std::invalid_argument);
  // odd branch 2 gamma - 1 vs n = 12 + 2 gamma: reaches n/2 from gamma = 7
  CHECK_NOTHROW(generate_family(2, 6, Placement::odd()));
  CHECK_THROWS_AS(generate_family(2, 7, Placement::odd()), std::invalid_argument);
}

TEST_CASE("write_family") {
  const auto dir = std::filesystem::temp_directory_path() / "uleq_test_family";
  std::filesystem::remove_all(dir);
  const auto fam = generate_family(2, 1);
  write_family(dir, fam);

  CHECK(load_edge_list(dir / "base.txt") == fam.base);
  CHECK(load_edge_list(dir / "G2.txt") == fam.members[1]);

  std::ifstream in(dir / "manifest.json");
  const auto manifest = nlohmann::json::parse(in);
  CHECK(manifest["n"] == 14);
  CHECK(manifest["ell"] == 2);
  CHECK(manifest["graphs"].size() == 3);
  CHECK(manifest["graphs"][0]["class"] == "tree");
  CHECK(manifest["graphs"][0]["cycle_length"].is_null());
  CHECK(manifest["graphs"][2]["cycle_length"] == 9);
  std::filesystem::remove_all(dir);
}

TEST_CASE("16-vertex structure from a 5-vertex G* and 6-vertex block") {
  const Graph gstar(5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}});
  const Graph gbreve(6, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {4, 6}});
  const WStructure w = build_w(gstar, gbreve, 2, {0, 1, 0, 1, 1});
  CHECK(w.n() == 16);
  CHECK(w.assembled.size() == 2 * 4 + 6 + 2 * 3);
  CHECK(w.assembled.connected());
}
