#include "uleq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <limits>
#include <numeric>
#include <numbers>
#include <sstream>

#include "uleq/tree_count.hpp"

namespace uleq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kFailureSamples = 5;

nlohmann::json residual_json(double x) {
  if (std::isfinite(x)) return x;
  return "inf";
}

nlohmann::json spectrum_json(const Spectrum& s) { return s.values; }

void finish(CheckReport& r) {
  r.passed = r.max_residual <= r.tolerance;
  r.failures = r.passed ? 0 : 1;
}

struct GreedyRemoval {
  double residual = 0.0;
  Spectrum rest;
};

// Nearest-match removal that reports the worst gap instead of throwing.
GreedyRemoval remove_nearest(const Spectrum& s, const Spectrum& d) {
  GreedyRemoval out;
  if (d.size() > s.size()) {
    out.residual = kInf;
    return out;
  }
  std::vector<bool> used(s.size(), false);
  for (double x : d.values) {
    std::size_t best = 0;
    double gap = kInf;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!used[i] && std::abs(s[i] - x) < gap) {
        gap = std::abs(s[i] - x);
        best = i;
      }
    }
    used[best] = true;
    out.residual = std::max(out.residual, gap);
  }
  std::vector<double> rest;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!used[i]) rest.push_back(s[i]);
  }
  out.rest = Spectrum(std::move(rest), s.tol);
  return out;
}

/// Folds single-instance reports into a batch report.
class Batch {
 public:
  Batch(std::string claim, double tol, std::optional<std::uint64_t> seed = std::nullopt) {
    report_.claim = std::move(claim);
    report_.tolerance = tol;
    report_.seed = seed;
    report_.passed = true;
  }

  void add(const CheckReport& sub, nlohmann::json label) {
    ++report_.instances;
    report_.max_residual = std::max(report_.max_residual, sub.max_residual);
    if (!sub.passed) {
      ++report_.failures;
      report_.passed = false;
      auto& samples = report_.evidence["failure_samples"];
      if (samples.size() < kFailureSamples) samples.push_back({{"instance", std::move(label)}, {"report", to_json(sub)}});
    }
  }

  void fail(const std::string& what, nlohmann::json label) {
    CheckReport sub;
    sub.claim = report_.claim;
    sub.max_residual = kInf;
    sub.evidence["error"] = what;
    add(sub, std::move(label));
  }

  CheckReport& report() { return report_; }

 private:
  CheckReport report_;
};

nlohmann::json spec_json(const StarlikeSpec& spec, int k) {
  return {{"branches", spec.branch_lengths}, {"k", k}, {"n", spec.order()}};
}

/// E_{e_1} of g viewed in S_{n,k}, in g's own labeling.
Graph insert_first(const Graph& g, int k) {
  const WStructure w = s_as_w(g, k);
  return apply_ez(w, unit_vector(k, 1)).relabeled(w.source_label);
}

double uniform_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

BinaryVector random_bits(std::mt19937_64& rng, int k) {
  BinaryVector v(k);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1U);
  return v;
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["status"] = r.passed ? "pass" : "fail";
  j["tolerance"] = r.tolerance;
  j["max_residual"] = residual_json(r.max_residual);
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["observational"] = r.observational;
  j["evidence"] = r.evidence;
  return j;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(24) << "claim" << std::right << std::setw(10) << "instances" << std::setw(8) << "pass"
      << std::setw(8) << "fail" << std::setw(14) << "max residual" << "\n";
  for (const auto& r : reports) {
    std::ostringstream res;
    if (std::isfinite(r.max_residual)) {
      res << std::scientific << std::setprecision(2) << r.max_residual;
    } else {
      res << "inf";
    }
    std::string name = r.claim + (r.observational ? " (obs)" : "");
    out << std::left << std::setw(24) << name << std::right << std::setw(10) << r.instances << std::setw(8)
        << (r.instances - r.failures) << std::setw(8) << r.failures << std::setw(14) << res.str() << "\n";
  }
  return out.str();
}

CheckReport check_spectral_replacement(const WStructure& w, const BinaryVector& z, double tol) {
  if (static_cast<int>(z.size()) != w.k()) throw std::invalid_argument("characteristic vector length differs from k");
  CheckReport r;
  r.claim = "spectral-replacement";
  r.tolerance = tol;
  r.instances = 1;
  r.evidence["k"] = w.k();
  r.evidence["n"] = w.n();
  r.evidence["y"] = to_string(w.y);
  r.evidence["z"] = to_string(z);
  try {
    const SymmetricMatrix h = attachment_block(w.gstar, w.y);
    const Spectrum d = sym_eigenvalues(h);
    const Spectrum f = sym_eigenvalues(inserted_block(h, z));
    const Spectrum before = laplacian_spectrum(w.assembled);
    const Spectrum after = laplacian_spectrum(apply_ez(w, z));

    const GreedyRemoval removal = remove_nearest(before, d);
    double replace_residual = kInf;
    if (std::isfinite(removal.residual)) {
      replace_residual = max_abs_difference(multiset_union(removal.rest, f), after);
    }
    r.max_residual = std::max(removal.residual, replace_residual);
    r.evidence["D"] = spectrum_json(d);
    r.evidence["F"] = spectrum_json(f);
    r.evidence["lspect_g"] = spectrum_json(before);
    r.evidence["lspect_ez"] = spectrum_json(after);
    r.evidence["embed_residual"] = residual_json(removal.residual);
    r.evidence["replace_residual"] = residual_json(replace_residual);
  } catch (const std::exception& e) {
    r.max_residual = kInf;
    r.evidence["error"] = e.what();
  }
  finish(r);
  return r;
}

CheckReport check_dk_fk(const WStructure& w, double tol) {
  const int k = w.k();
  if (!(w.gstar == Graph::path(k)) || w.y != unit_vector(k, k)) {
    throw std::invalid_argument("structure is not of the form G(P_k, Ğ, e_k)");
  }
  CheckReport r;
  r.claim = "dk-fk";
  r.tolerance = tol;
  r.instances = 1;
  r.evidence["k"] = k;
  r.evidence["n"] = w.n();
  try {
    const auto [dk, fk] = dk_fk(k);
    // Second route: the k x k blocks themselves.
    const SymmetricMatrix h = attachment_block(w.gstar, w.y);
    const double d_route = max_abs_difference(dk, sym_eigenvalues(h));
    const double f_route = max_abs_difference(fk, sym_eigenvalues(inserted_block(h, unit_vector(k, 1))));

    const Spectrum before = laplacian_spectrum(w.assembled);
    const Spectrum after = laplacian_spectrum(apply_ez(w, unit_vector(k, 1)));
    const GreedyRemoval removal = remove_nearest(before, dk);
    double replace_residual = kInf;
    if (std::isfinite(removal.residual)) {
      replace_residual = max_abs_difference(multiset_union(removal.rest, fk), after);
    }
    r.max_residual = std::max({d_route, f_route, removal.residual, replace_residual});
    r.evidence["D_k"] = spectrum_json(dk);
    r.evidence["F_k"] = spectrum_json(fk);
    r.evidence["closed_form_vs_block"] = std::max(d_route, f_route);
    r.evidence["embed_residual"] = residual_json(removal.residual);
    r.evidence["replace_residual"] = residual_json(replace_residual);
  } catch (const std::exception& e) {
    r.max_residual = kInf;
    r.evidence["error"] = e.what();
  }
  finish(r);
  return r;
}

CheckReport check_dk_fk(const Graph& g, int k, double tol) { return check_dk_fk(s_as_w(g, k), tol); }

CheckReport check_energy_equality(const StarlikeSpec& spec, int k, double tol) {
  const Graph g = build_starlike(spec);
  const Graph g2 = insert_first(g, k);
  CheckReport r;
  r.claim = "energy-equality";
  r.tolerance = tol;
  r.instances = 1;
  r.evidence = spec_json(spec, k);
  try {
    const double le = laplacian_energy(g);
    const double le2 = laplacian_energy(g2);
    const double direct = le2 - le;
    double formula_gap = kInf;
    try {
      const double via_formula = delta_le(g, g2);
      formula_gap = std::abs(via_formula - direct);
      r.evidence["delta_le_formula"] = via_formula;
    } catch (const std::domain_error& e) {
      r.evidence["delta_le_error"] = e.what();
    }
    r.max_residual = std::max(std::abs(direct), formula_gap);
    r.evidence["energy_tree"] = le;
    r.evidence["energy_unicyclic"] = le2;
    r.evidence["delta_le_direct"] = direct;
    r.evidence["formula_gap"] = residual_json(formula_gap);
  } catch (const std::exception& e) {
    r.max_residual = kInf;
    r.evidence["error"] = e.what();
  }
  finish(r);
  return r;
}

CheckReport check_sigma(const StarlikeSpec& spec, int k, bool enforce_odd_bound) {
  const Graph g = build_starlike(spec, enforce_odd_bound);
  const Graph g2 = insert_first(g, k);
  CheckReport r;
  r.claim = "sigma";
  r.tolerance = 0.0;
  r.instances = 1;
  r.evidence = spec_json(spec, k);
  try {
    const int half = g.order() / 2;
    const int sigma_t = sigma_graph(g);
    const int sigma_u = sigma_graph(g2);
    r.max_residual = (sigma_t == half && sigma_u == half) ? 0.0 : kInf;
    r.evidence["sigma_tree"] = sigma_t;
    r.evidence["sigma_unicyclic"] = sigma_u;
    r.evidence["half_n"] = half;
  } catch (const std::exception& e) {
    r.max_residual = kInf;
    r.evidence["error"] = e.what();
  }
  finish(r);
  return r;
}

CheckReport check_family(int ell, int gamma, const Placement& placement, double tol) {
  const EquienergeticFamily family = generate_family(ell, gamma, placement);
  CheckReport r;
  r.claim = "family";
  r.tolerance = tol;
  r.instances = 1;
  r.evidence["ell"] = ell;
  r.evidence["gamma"] = gamma;
  r.evidence["placement"] = to_string(family.placement);
  r.evidence["n"] = family.order();
  r.evidence["branches"] = family.base_spec.branch_lengths;
  try {
    const Spectrum base = laplacian_spectrum(family.base);
    const double base_d = to_double(average_degree(family.base));
    const double le0 = energy_from_spectrum(base, base_d);

    std::vector<Spectrum> spectra;
    std::vector<double> energies{le0};
    double le_spread = 0.0;
    bool structure_ok = true;
    nlohmann::json cycles = nlohmann::json::array();
    nlohmann::json multiplicities = nlohmann::json::array();
    for (int i = 1; i <= ell; ++i) {
      const Graph& gi = family.members[i - 1];
      spectra.push_back(laplacian_spectrum(gi));
      const double le = energy_from_spectrum(spectra.back(), to_double(average_degree(gi)));
      energies.push_back(le);
      le_spread = std::max(le_spread, std::abs(le - le0));

      const auto cycle = unique_cycle_length(gi);
      cycles.push_back(cycle ? nlohmann::json(*cycle) : nlohmann::json(nullptr));
      if (!cycle || *cycle != 4 * i + 1) structure_ok = false;  // two 2i-branches joined at the leaves

      const double marker = 2.0 + 2.0 * std::cos(2.0 * std::numbers::pi / (4.0 * i + 1.0));
      const int in_base = base.multiplicity(marker, tol);
      const int in_member = spectra.back().multiplicity(marker, tol);
      multiplicities.push_back({{"eigenvalue", marker}, {"in_base", in_base}, {"in_member", in_member}});
      if (in_member >= in_base) structure_ok = false;
    }

    double closest_pair = kInf;
    bool noncospectral = true;
    for (int i = 0; i < ell; ++i) {
      for (int j = i + 1; j < ell; ++j) {
        closest_pair = std::min(closest_pair, max_abs_difference(spectra[i], spectra[j]));
        Spectrum a = spectra[i], b = spectra[j];
        a.tol = b.tol = tol;
        if (cospectral(a, b)) noncospectral = false;
      }
    }

    if (family.order() <= 20) {
      bool agrees = true;
      std::vector<std::vector<BigInt>> polys;
      for (const auto& gi : family.members) polys.push_back(characteristic_polynomial(gi));
      for (int i = 0; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
          Spectrum a = spectra[i], b = spectra[j];
          a.tol = b.tol = tol;
          if ((polys[i] == polys[j]) != cospectral(a, b)) agrees = false;
        }
      }
      r.evidence["charpoly_agrees"] = agrees;
      if (!agrees) structure_ok = false;
    }

    r.max_residual = (structure_ok && noncospectral) ? le_spread : kInf;
    r.evidence["energies"] = energies;
    r.evidence["energy_spread"] = le_spread;
    r.evidence["cycle_lengths"] = cycles;
    r.evidence["marker_multiplicities"] = multiplicities;
    r.evidence["pairwise_noncospectral"] = noncospectral;
    r.evidence["closest_member_pair"] = residual_json(closest_pair);
  } catch (const std::exception& e) {
    r.max_residual = kInf;
    r.evidence["error"] = e.what();
  }
  finish(r);
  return r;
}

CheckReport check_trig_identity(int k_max, double tol) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  CheckReport r;
  r.claim = "trig-identity";
  r.tolerance = tol;
  r.instances = k_max;
  int worst_k = 1;
  for (int k = 1; k <= k_max; ++k) {
    // Long double with Neumaier summation: in plain double the rounding of
    // k terms alone reaches ~1e-12 by k = 1000.
    long double sum = 0.0L, carry = 0.0L;
    for (int j = 1; j <= k; ++j) {
      const long double term = std::cos(2.0L * j * std::numbers::pi_v<long double> / (2.0L * k + 1.0L));
      const long double t = sum + term;
      carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
      sum = t;
    }
    const double residual = static_cast<double>(std::abs(sum + carry + 0.5L));
    if (residual > r.max_residual) {
      r.max_residual = residual;
      worst_k = k;
    }
    if (residual > tol) ++r.failures;
  }
  r.passed = r.failures == 0;
  r.evidence["k_max"] = k_max;
  r.evidence["worst_k"] = worst_k;
  return r;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (uniform_real(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(uniform_int(rng, 1, v - 1), v);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
  return Graph(n, edges).relabeled(perm);
}

WStructure random_w_structure(std::mt19937_64& rng, int max_k, int max_breve) {
  const int k = uniform_int(rng, 1, max_k);
  const int nb = uniform_int(rng, 1, max_breve);
  const Graph gstar = random_graph(rng, k, 0.5);
  const Graph gbreve = random_graph(rng, nb, 0.4);
  const int root = uniform_int(rng, 1, nb);
  return build_w(gstar, gbreve, root, random_bits(rng, k));
}

std::vector<std::pair<StarlikeSpec, int>> enumerate_starlike(int n_max, bool enforce_odd_bound) {
  std::vector<std::pair<StarlikeSpec, int>> out;
  std::vector<int> parts;
  // Nondecreasing even parts; `budget` is what the even branches may still use
  // while leaving room for the center and an odd branch of length >= 1.
  std::function<void(int, int)> extend = [&](int min_part, int budget) {
    if (parts.size() >= 2) {
      const int even_sum = std::accumulate(parts.begin(), parts.end(), 0);
      for (int odd = 1; 1 + even_sum + odd <= n_max; odd += 2) {
        const int n = 1 + even_sum + odd;
        const bool short_odd = 2 * odd < n;
        if (short_odd != enforce_odd_bound) continue;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
          if (parts[i] != parts[i + 1] || (i > 0 && parts[i - 1] == parts[i])) continue;
          const int k = parts[i];
          std::vector<int> rest = parts;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i), rest.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          StarlikeSpec spec;
          spec.branch_lengths = {k, k};
          spec.branch_lengths.insert(spec.branch_lengths.end(), rest.begin(), rest.end());
          spec.branch_lengths.push_back(odd);
          out.emplace_back(std::move(spec), k);
        }
      }
    }
    for (int p = min_part; p <= budget; p += 2) {
      parts.push_back(p);
      extend(p, budget - p);
      parts.pop_back();
    }
  };
  extend(2, n_max - 2);
  return out;
}

CheckReport check_spectral_replacement_random(std::uint64_t seed, int count, int max_k, int max_breve, double tol) {
  std::mt19937_64 rng(seed);
  Batch batch("spectral-replacement", tol, seed);
  for (int i = 0; i < count; ++i) {
    const WStructure w = random_w_structure(rng, max_k, max_breve);
    const BinaryVector z = random_bits(rng, w.k());
    batch.add(check_spectral_replacement(w, z, tol), {{"index", i}});
  }
  return batch.report();
}

CheckReport check_dk_fk_random(std::uint64_t seed, int count, int max_k, int max_breve, double tol) {
  std::mt19937_64 rng(seed);
  Batch batch("dk-fk", tol, seed);
  for (int i = 0; i < count; ++i) {
    const int k = uniform_int(rng, 1, max_k);
    const int nb = uniform_int(rng, 1, max_breve);
    const Graph gbreve = random_graph(rng, nb, 0.4);
    const int root = uniform_int(rng, 1, nb);
    batch.add(check_dk_fk(build_w(Graph::path(k), gbreve, root, unit_vector(k, k)), tol), {{"index", i}, {"k", k}});
  }
  return batch.report();
}

CheckReport check_energy_sweep(int n_max, double tol) {
  Batch batch("energy-equality", tol);
  for (const auto& [spec, k] : enumerate_starlike(n_max)) {
    try {
      batch.add(check_energy_equality(spec, k, tol), spec_json(spec, k));
    } catch (const std::exception& e) {
      batch.fail(e.what(), spec_json(spec, k));
    }
  }
  batch.report().evidence["n_max"] = n_max;
  return batch.report();
}

CheckReport check_sigma_sweep(int n_max) {
  Batch batch("sigma", 0.0);
  for (const auto& [spec, k] : enumerate_starlike(n_max)) {
    try {
      batch.add(check_sigma(spec, k), spec_json(spec, k));
    } catch (const std::exception& e) {
      batch.fail(e.what(), spec_json(spec, k));
    }
  }
  batch.report().evidence["n_max"] = n_max;
  return batch.report();
}

CheckReport check_sigma_long_odd(int n_max) {
  Batch batch("sigma-long-odd", 0.0);
  for (const auto& [spec, k] : enumerate_starlike(n_max, false)) {
    try {
      batch.add(check_sigma(spec, k, false), spec_json(spec, k));
    } catch (const std::exception& e) {
      batch.fail(e.what(), spec_json(spec, k));
    }
  }
  auto& r = batch.report();
  r.observational = true;
  r.evidence["n_max"] = n_max;
  return r;
}

CheckReport check_jt_oracle_random(std::uint64_t seed, int count, int max_n, double tol) {
  std::mt19937_64 rng(seed);
  Batch batch("jt-oracle", 0.0, seed);
  int deferred = 0;
  for (int i = 0; i < count; ++i) {
    const int n = uniform_int(rng, 1, max_n);
    const Graph tree = random_tree(rng, n);
    const int root = uniform_int(rng, 1, n);
    const int q = uniform_int(rng, 1, 12);
    const int p = uniform_int(rng, 0, n * q);
    const Rational alpha(p, q);

    const LocateResult jt = jt_locate(RootedTree(tree, root), alpha);
    const Spectrum s = laplacian_spectrum(tree);
    const double a = to_double(alpha);
    int above = 0, equal = 0, below = 0;
    bool ambiguous = false;
    for (double mu : s.values) {
      const double gap = std::abs(mu - a);
      if (gap <= tol) {
        ++equal;
      } else if (mu > a) {
        ++above;
      } else {
        ++below;
      }
      if (gap > tol && gap < 1e-6) ambiguous = true;
    }

    CheckReport sub;
    sub.claim = "jt-oracle";
    sub.instances = 1;
    const bool same = jt.above == above && jt.equal == equal && jt.below == below;
    if (!same && ambiguous) ++deferred;  // exact counts win inside the ambiguity band
    sub.max_residual = (same || ambiguous) ? 0.0 : kInf;
    sub.evidence = {{"n", n},         {"root", root},          {"alpha", to_string(alpha)},
                    {"jt", {jt.above, jt.equal, jt.below}}, {"dense", {above, equal, below}}};
    finish(sub);
    batch.add(sub, {{"index", i}});
  }
  batch.report().evidence["deferred_to_exact"] = deferred;
  return batch.report();
}

CheckReport check_family_sweep(int ell_max, int gamma_max, double tol) {
  Batch batch("family", tol);
  for (int ell = 2; ell <= ell_max; ++ell) {
    for (int gamma = 1; gamma <= gamma_max; ++gamma) {
      for (const Placement& placement : {Placement::even(), Placement::odd()}) {
        nlohmann::json label{{"ell", ell}, {"gamma", gamma}, {"placement", to_string(placement)}};
        try {
          batch.add(check_family(ell, gamma, placement, tol), label);
        } catch (const std::exception& e) {
          batch.fail(e.what(), label);
        }
      }
    }
  }
  return batch.report();
}

CheckReport check_tridiagonal_closed_form(int s_max, double tol) {
  Batch batch("tridiagonal", tol);
  for (int s = 1; s <= s_max; ++s) {
    for (double alpha : {1.0, -1.0}) {
      TridiagonalSpec t{.a = -1.0, .b = 2.0, .c = -1.0, .alpha = alpha, .beta = 0.0, .s = s};
      CheckReport sub;
      sub.claim = "tridiagonal";
      sub.tolerance = tol;
      sub.instances = 1;
      sub.max_residual = max_abs_difference(tridiagonal_spectrum(t), sym_eigenvalues(tridiagonal_matrix(t)));
      finish(sub);
      batch.add(sub, {{"s", s}, {"alpha", alpha}});
    }
  }
  return batch.report();
}

CheckReport check_structural_random(std::uint64_t seed, int count, int max_n, double tol) {
  std::mt19937_64 rng(seed);
  Batch batch("structural", tol, seed);
  for (int i = 0; i < count; ++i) {
    const int n = uniform_int(rng, 1, max_n);
    const double mean_degree = 0.3 + 2.7 * uniform_real(rng);
    const Graph g = random_graph(rng, n, std::min(1.0, mean_degree / std::max(1, n - 1)));
    const Spectrum s = laplacian_spectrum(g);
    const int kernel = static_cast<int>(
        std::count_if(s.values.begin(), s.values.end(), [&](double mu) { return std::abs(mu) <= tol; }));

    CheckReport sub;
    sub.claim = "structural";
    sub.tolerance = tol;
    sub.instances = 1;
    const double trace_gap = std::abs(s.sum() - 2.0 * g.size());
    sub.max_residual = kernel == g.component_count() ? trace_gap : kInf;
    sub.evidence = {{"n", n}, {"edges", g.size()}, {"components", g.component_count()}, {"kernel", kernel}};
    finish(sub);
    batch.add(sub, {{"index", i}});
  }
  return batch.report();
}

std::vector<BigInt> characteristic_polynomial(const Graph& g) {
  // Faddeev-LeVerrier: M_k = L M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(L M_k)/k.
  const int n = g.order();
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix lap(n, std::vector<BigInt>(n, 0));
  for (int v = 1; v <= n; ++v) lap[v - 1][v - 1] = g.degree(v);
  for (auto [u, v] : g.edges()) lap[u - 1][v - 1] = lap[v - 1][u - 1] = -1;

  auto multiply = [&](const Matrix& a, const Matrix& b) {
    Matrix c(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
      }
    return c;
  };

  std::vector<BigInt> coeff(n + 1, 0);
  coeff[n] = 1;
  Matrix lm(n, std::vector<BigInt>(n, 0));  // L * M_{k-1}, with M_0 = 0
  for (int k = 1; k <= n; ++k) {
    Matrix m = lm;
    for (int i = 0; i < n; ++i) m[i][i] += coeff[n - k + 1];
    lm = multiply(lap, m);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += lm[i][i];
    coeff[n - k] = -trace / k;
  }
  return coeff;
}

std::vector<CheckReport> run_all(Budget budget, std::uint64_t seed) {
  const bool full = budget == Budget::full;
  std::vector<std::function<CheckReport()>> jobs{
      [=] { return check_spectral_replacement_random(seed, full ? 500 : 50); },
      [=] { return check_dk_fk_random(seed + 1, full ? 200 : 30); },
      [=] { return check_energy_sweep(full ? 30 : 20); },
      [=] { return check_sigma_sweep(full ? 30 : 20); },
      [=] { return check_sigma_long_odd(full ? 30 : 20); },
      [=] { return check_jt_oracle_random(seed + 2, full ? 500 : 50, full ? 200 : 60); },
      [=] { return check_family_sweep(full ? 6 : 3, full ? 3 : 2); },
      [=] { return check_tridiagonal_closed_form(full ? 64 : 16); },
      [=] { return check_trig_identity(full ? 1000 : 100); },
      [=] { return check_structural_random(seed + 3, full ? 1000 : 100, full ? 100 : 40); },
  };
  std::vector<std::future<CheckReport>> pending;
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
  std::vector<CheckReport> reports;
  for (auto& f : pending) reports.push_back(f.get());
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.claim < b.claim; });
  return reports;
}

}  // namespace uleq
