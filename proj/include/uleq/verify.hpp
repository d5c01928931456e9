#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "uleq/constructions.hpp"
#include "uleq/graph.hpp"
#include "uleq/rational.hpp"
#include "uleq/spectra.hpp"

namespace uleq {

/// Outcome of one claim check, possibly aggregated over many instances.
///
/// A structural condition that fails (wrong sigma, a cospectral pair, an
/// unmatched eigenvalue) is recorded as an infinite residual, so `passed` is
/// exactly "every residual <= tolerance".
struct CheckReport {
  std::string claim;
  bool passed = false;
  double tolerance = 0.0;
  double max_residual = 0.0;
  int instances = 0;
  int failures = 0;
  std::optional<std::uint64_t> seed;
  /// Outcomes outside proven territory; reported but never fail a batch.
  bool observational = false;
  nlohmann::json evidence = nlohmann::json::object();
};

nlohmann::json to_json(const CheckReport& r);
/// One row per report: claim, instances, pass, fail, max residual.
std::string summary_table(const std::vector<CheckReport>& reports);

// Single-instance checks. A claim that does not hold is reported, never
// thrown; inputs outside a check's domain throw std::invalid_argument.

/// D = spect(L(G*) + E_y) sits inside Lspect(G), and replacing it by
/// F = spect(L(G*) + E_y + 2E_z) gives Lspect(E_z(G)).
CheckReport check_spectral_replacement(const WStructure& w, const BinaryVector& z, double tol = 1e-8);

/// For G* = P_k (labels along the path) and y = e_k, E_{e_1} swaps the closed
/// form set D_k for F_k. Ğ is arbitrary.
CheckReport check_dk_fk(const WStructure& w, double tol = 1e-8);
/// Same, reading g as a starlike tree split off two k-branches.
CheckReport check_dk_fk(const Graph& g, int k, double tol = 1e-8);

/// LE(G) = LE(E_{e_1}(G)) for G built from spec and viewed in S_{n,k}, and
/// the shared-sigma formula reproduces the direct energy difference.
CheckReport check_energy_equality(const StarlikeSpec& spec, int k, double tol = 1e-8);

/// sigma(G) = sigma(E_{e_1}(G)) = n/2; the tree side is exact.
CheckReport check_sigma(const StarlikeSpec& spec, int k, bool enforce_odd_bound = true);

/// All ell + 1 family graphs share LE, the ell unicyclic ones are pairwise
/// noncospectral, G_i has cycle length 4i + 1, and 2 + 2cos(2 pi/(4i+1)) is
/// rarer in G_i than in G.
CheckReport check_family(int ell, int gamma, const Placement& placement = Placement::even(), double tol = 1e-8);

/// |sum_{j<=k} cos(2 j pi/(2k+1)) + 1/2| <= tol for k = 1..k_max.
CheckReport check_trig_identity(int k_max, double tol = 1e-12);

// Batch checks over generated instances.

/// Deterministic uniform integer in [lo, hi], independent of the standard
/// library's distribution implementation.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

/// Erdős–Rényi G(n, p).
Graph random_graph(std::mt19937_64& rng, int n, double p);
/// Random labeled tree (random attachment, then a random relabeling).
Graph random_tree(std::mt19937_64& rng, int n);
/// k <= max_k, |Ğ| <= max_breve, random G*, Ğ, root and y.
WStructure random_w_structure(std::mt19937_64& rng, int max_k, int max_breve);

/// Every (spec, k) with n <= n_max: even branch multisets with an odd last
/// branch, one entry per even length k occurring at least twice. The
/// returned spec lists k, k first. With enforce_odd_bound = false only specs
/// whose odd branch is >= n/2 are produced.
std::vector<std::pair<StarlikeSpec, int>> enumerate_starlike(int n_max, bool enforce_odd_bound = true);

CheckReport check_spectral_replacement_random(std::uint64_t seed, int count, int max_k = 6, int max_breve = 10,
                                              double tol = 1e-8);
/// check_dk_fk over random members of the wider class: G* = P_k for any
/// k <= max_k, y = e_k, random rooted Ğ with at most max_breve vertices.
CheckReport check_dk_fk_random(std::uint64_t seed, int count, int max_k = 8, int max_breve = 10, double tol = 1e-8);
CheckReport check_energy_sweep(int n_max, double tol = 1e-8);
CheckReport check_sigma_sweep(int n_max);
/// Observation only: sigma = n/2 on trees whose odd branch is >= n/2, where
/// the bound that guarantees it no longer applies.
CheckReport check_sigma_long_odd(int n_max);
/// jt_locate counts vs dense eigenvalue counts on random trees and random
/// rational alpha in [0, n].
CheckReport check_jt_oracle_random(std::uint64_t seed, int count, int max_n, double tol = 1e-9);
CheckReport check_family_sweep(int ell_max, int gamma_max, double tol = 1e-8);
/// Closed-form tridiagonal spectrum vs Jacobi, s = 1..s_max, alpha = +-1.
CheckReport check_tridiagonal_closed_form(int s_max, double tol = 1e-9);
/// Trace = 2e and kernel multiplicity = component count on random graphs.
CheckReport check_structural_random(std::uint64_t seed, int count, int max_n, double tol = 1e-9);

/// Coefficients of det(x I - L(g)), constant term first, exact.
std::vector<BigInt> characteristic_polynomial(const Graph& g);

enum class Budget { small, full };

/// Every batch check, run concurrently, returned sorted by claim.
std::vector<CheckReport> run_all(Budget budget, std::uint64_t seed);

}  // namespace uleq
