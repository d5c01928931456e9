// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "uleq/constructions.hpp"
#include "uleq/spectra.hpp"
#include "uleq/tree_count.hpp"
#include "uleq/verify.hpp"

using namespace uleq;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double max_gap(const Spectrum& s, const std::vector<double>& expected) {
  if (s.size() != expected.size()) return INFINITY;
  double gap = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) gap = std::max(gap, std::abs(s[i] - expected[i]));
  return gap;
}

// Printed values carry 5 decimals, so anything within half a unit in the
// last place reproduces them.
constexpr double kPrinted = 5e-6;

Outcome worked_example() {
  const WStructure w = build_w(Graph::path(3), Graph::cycle(5), 1, {1, 1, 1});
  const BinaryVector z{1, 1, 1};
  const SymmetricMatrix h = attachment_block(w.gstar, w.y);
  const double d_gap = max_gap(sym_eigenvalues(h), {4, 2, 1});
  const double f_gap = max_gap(sym_eigenvalues(inserted_block(h, z)), {6, 4, 3});
  const double g_gap =
      max_gap(laplacian_spectrum(w.assembled), {9.03601, 4, 4, 3.61803, 2.47142, 2, 2, 1.38197, 1, 0.49257, 0});
  const double ez_gap = max_gap(laplacian_spectrum(apply_ez(w, z)),
                                {9.03601, 6, 4, 4, 3.61803, 3, 2.47142, 2, 1.38197, 0.49257, 0});
  const bool replaced = check_spectral_replacement(w, z, 1e-9).passed;
  return {d_gap <= 1e-9 && f_gap <= 1e-9 && g_gap <= kPrinted && ez_gap <= kPrinted && replaced,
          fmt("D/F gap %.1e, printed spectra gap %.1e", std::max(d_gap, f_gap), std::max(g_gap, ez_gap))};
}

Outcome family_example() {
  const auto family = generate_family(4, 2, Placement::even());
  const double printed = 60.70698;
  double spread = 0.0;
  std::vector<Spectrum> spectra;
  bool sizes = family.order() == 44 && family.graphs().size() == 5;
  for (const Graph& g : family.graphs()) {
    sizes = sizes && g.order() == 44;
    spread = std::max(spread, std::abs(laplacian_energy(g) - printed));
  }
  for (const Graph& g : family.members) spectra.push_back(laplacian_spectrum(g));
  bool distinct = true;
  for (std::size_t i = 0; i < spectra.size(); ++i)
    for (std::size_t j = i + 1; j < spectra.size(); ++j) distinct = distinct && !cospectral(spectra[i], spectra[j]);
  return {sizes && distinct && spread <= 1e-4,
          fmt("max |LE - 60.70698| = %.2e, members pairwise noncospectral: ", spread) + (distinct ? "yes" : "no")};
}

Outcome from_report(const CheckReport& r) {
  return {r.passed, fmt("%.0f instances, max residual %.2e", r.instances, r.max_residual)};
}

Outcome energy_sweep() {
  const CheckReport r = check_energy_sweep(30, 1e-8);
  return from_report(r);
}

Outcome exact_counts() {
  const CheckReport jt = check_jt_oracle_random(20240501, 500, 200);
  const CheckReport sigma = check_sigma_sweep(30);
  return {jt.passed && sigma.passed,
          fmt("%.0f trees agree, %.0f sigma instances at n/2", jt.instances - jt.failures,
              sigma.instances - sigma.failures)};
}

struct Criterion {
  const char* name;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 worked example spectra", 1.0, worked_example},
      {"2 44-vertex equienergetic family", 5.0, family_example},
      {"3 spectral replacement, 500 random structures", 30.0,
       [] { return from_report(check_spectral_replacement_random(20240501, 500, 6, 10, 1e-8)); }},
      {"4 energy equality, all starlike n <= 30", 0.0, energy_sweep},
      {"5 exact counts vs dense, sigma = n/2", 0.0, exact_counts},
      {"6 tridiagonal closed form, s <= 64", 0.0,
       [] { return from_report(check_tridiagonal_closed_form(64, 1e-9)); }},
      {"7 cosine sum, k <= 1000", 0.0, [] { return from_report(check_trig_identity(1000, 1e-12)); }},
      {"8 trace and kernel, 1000 random graphs", 0.0,
       [] { return from_report(check_structural_random(20240501, 1000, 100, 1e-9)); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit <= 0.0 || secs < c.time_limit;
    const bool ok = o.ok && in_time;
    if (!ok) ++failed;
    std::printf("%s  %-48s %7.3fs  %s%s\n", ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str(),
                in_time ? "" : " (over time limit)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
