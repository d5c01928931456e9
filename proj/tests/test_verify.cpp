#include <doctest.h>

#include <random>
#include <set>

#include "uleq/tree_count.hpp"
#include "uleq/verify.hpp"

using namespace uleq;

TEST_CASE("spectral replacement on the worked example") {
  const WStructure w = build_w(Graph::path(3), Graph::cycle(5), 1, {1, 1, 1});
  const CheckReport r = check_spectral_replacement(w, {1, 1, 1});
  CHECK(r.claim == "spectral-replacement");
  CHECK(r.passed);
  CHECK(r.max_residual <= 1e-9);
  CHECK(r.evidence["F"].size() == 3);
  CHECK(r.evidence["D"][0].get<double>() == doctest::Approx(4.0));

  // The empty z changes nothing.
  CHECK(check_spectral_replacement(w, {0, 0, 0}).passed);
  CHECK_THROWS_AS(check_spectral_replacement(w, {1, 1}), std::invalid_argument);
}

TEST_CASE("spectral replacement on random structures") {
  const CheckReport r = check_spectral_replacement_random(7, 60);
  CHECK(r.passed);
  CHECK(r.instances == 60);
  CHECK(r.seed == 7u);
}

TEST_CASE("D_k and F_k checks") {
  const Graph t = build_starlike({{4, 4, 2, 2, 3}});
  CHECK(check_dk_fk(t, 2).passed);
  CHECK(check_dk_fk(t, 4).passed);
  // the wider class: odd k, arbitrary rooted block
  CHECK(check_dk_fk(build_w(Graph::path(3), Graph::cycle(4), 2, unit_vector(3, 3))).passed);
  CHECK_THROWS_AS(check_dk_fk(build_w(Graph::cycle(3), Graph::path(2), 1, unit_vector(3, 3))), std::invalid_argument);
  CHECK_THROWS_AS(check_dk_fk(build_w(Graph::path(3), Graph::path(2), 1, unit_vector(3, 1))), std::invalid_argument);
  CHECK(check_dk_fk_random(3, 40).passed);
}

TEST_CASE("energy equality and sigma") {
  const CheckReport e = check_energy_equality({{2, 2, 1}}, 2);
  CHECK(e.passed);
  CHECK(e.evidence["energy_tree"].get<double>() == doctest::Approx(7.841619252963777).epsilon(1e-12));

  const CheckReport e14 = check_energy_equality({{2, 2, 4, 4, 1}}, 4);
  CHECK(e14.passed);
  CHECK(std::abs(e14.evidence["energy_tree"].get<double>() - 19.26106752037876) <= 1e-9);

  const CheckReport s = check_sigma({{4, 4, 2, 2, 3}}, 4);
  CHECK(s.passed);
  CHECK(s.evidence["half_n"] == 8);
  CHECK_THROWS_AS(check_sigma({{2, 2, 5}}, 2), std::invalid_argument);
}

TEST_CASE("sweeps over small starlike trees") {
  CHECK(check_energy_sweep(16).passed);
  CHECK(check_sigma_sweep(16).passed);
  const CheckReport obs = check_sigma_long_odd(14);
  CHECK(obs.observational);
  CHECK(obs.instances > 0);
}

TEST_CASE("enumerate_starlike") {
  const auto all = enumerate_starlike(14);
  CHECK_FALSE(all.empty());
  std::set<std::vector<int>> seen;
  for (const auto& [spec, k] : all) {
    CHECK(starlike_violation(spec).empty());
    CHECK(spec.order() <= 14);
    CHECK(spec.k() == k);
    seen.insert(spec.branch_lengths);
  }
  CHECK(seen.size() == all.size());
  CHECK(seen.count({2, 2, 1}) == 1);
  CHECK(seen.count({2, 2, 4, 4, 1}) == 1);
  CHECK(seen.count({4, 4, 2, 2, 1}) == 1);
  CHECK(seen.count({2, 2, 3}) == 1);  // n = 8, 3 < 4

  for (const auto& [spec, k] : enumerate_starlike(14, false)) {
    CHECK(2 * spec.odd_branch() >= spec.order());
    CHECK(starlike_violation(spec, false).empty());
  }
}

TEST_CASE("family checks") {
  const CheckReport r = check_family(2, 1);
  CHECK(r.passed);
  CHECK(r.evidence["charpoly_agrees"] == true);
  CHECK(r.evidence["cycle_lengths"] == nlohmann::json::array({5, 9}));

  const CheckReport big = check_family(4, 2);
  CHECK(big.passed);
  CHECK(std::abs(big.evidence["energies"][0].get<double>() - 60.70698392218481) <= 1e-9);

  CHECK(check_family(2, 3, Placement::odd()).passed);
  CHECK_THROWS_AS(check_family(1, 1), std::invalid_argument);
}

TEST_CASE("trig identity") {
  const CheckReport r = check_trig_identity(200);
  CHECK(r.passed);
  CHECK(r.instances == 200);
  CHECK_THROWS_AS(check_trig_identity(0), std::invalid_argument);
}

TEST_CASE("tridiagonal and structural batches") {
  CHECK(check_tridiagonal_closed_form(20).passed);
  CHECK(check_structural_random(5, 50, 30).passed);
  CHECK(check_jt_oracle_random(9, 40, 50).passed);
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_polynomial(Graph::path(2)) == std::vector<BigInt>{0, -2, 1});
  // P_3: x (x - 1) (x - 3)
  CHECK(characteristic_polynomial(Graph::path(3)) == std::vector<BigInt>{0, 3, -4, 1});
  // K_3: x (x - 3)^2
  CHECK(characteristic_polynomial(Graph::cycle(3)) == std::vector<BigInt>{0, 9, -6, 1});
  // Two isolated vertices.
  CHECK(characteristic_polynomial(Graph(2, {})) == std::vector<BigInt>{0, 0, 1});

  // Linear coefficient is (-1)^(n-1) n times the spanning tree count; trees have one.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = uniform_int(rng, 2, 12);
    const auto p = characteristic_polynomial(random_tree(rng, n));
    CHECK(p[1] == (n % 2 == 0 ? -n : n));
  }
}

TEST_CASE("generators are deterministic by seed") {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 20; ++i) {
    CHECK(random_graph(a, 15, 0.3) == random_graph(b, 15, 0.3));
    CHECK(random_tree(a, 12) == random_tree(b, 12));
  }
  const auto r1 = check_spectral_replacement_random(123, 20);
  const auto r2 = check_spectral_replacement_random(123, 20);
  CHECK(r1.max_residual == r2.max_residual);
}

TEST_CASE("reports") {
  CheckReport ok;
  ok.claim = "x";
  ok.passed = true;
  ok.instances = 3;
  ok.max_residual = 1e-12;
  CheckReport bad;
  bad.claim = "y";
  bad.instances = 2;
  bad.failures = 1;
  bad.max_residual = std::numeric_limits<double>::infinity();

  const std::string table = summary_table({ok, bad});
  CHECK(table.find("claim") != std::string::npos);
  CHECK(table.find("1.00e-12") != std::string::npos);
  CHECK(table.find("inf") != std::string::npos);

  const auto j = to_json(bad);
  CHECK(j["status"] == "fail");
  CHECK(j["max_residual"] == "inf");
  CHECK(j["seed"].is_null());
}

TEST_CASE("run_all small budget") {
  const auto reports = run_all(Budget::small, 1);
  CHECK(reports.size() == 10u);
  for (const auto& r : reports) {
    INFO(r.claim);
    CHECK((r.passed || r.observational));
  }
}
