// Command-line front end: build graphs, print spectra and energies, run the
// equienergetic-family checks, and locate tree eigenvalues exactly.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or
// input error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uleq/constructions.hpp"
#include "uleq/graph_io.hpp"
#include "uleq/spectra.hpp"
#include "uleq/tree_count.hpp"
#include "uleq/verify.hpp"

namespace fs = std::filesystem;
using namespace uleq;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path default_out_dir() {
  if (const char* dir = std::getenv("ULEQ_OUT_DIR"); dir != nullptr && *dir != '\0') return dir;
  return ".";
}

std::string fixed(double x, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << (std::abs(x) < 0.5 * std::pow(10.0, -digits) ? 0.0 : x);
  return out.str();
}

std::string full(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

void emit_graph(const Graph& g, const std::string& output, const std::string& format) {
  const std::string text = format == "dot" ? to_dot(g) : to_edge_list(g);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw UsageError("cannot write " + output);
    out << text;
  }
  std::ostream& log = output.empty() ? std::cerr : std::cout;
  log << "n " << g.order() << "\nedges " << g.size() << "\nclass " << to_string(classify(g)) << "\n";
  if (auto len = unique_cycle_length(g)) log << "cycle_length " << *len << "\n";
}

// ---- spectrum ----------------------------------------------------------------

struct SpectrumArgs {
  std::string file;
  std::string format = "text";
};

int run_spectrum(const SpectrumArgs& a) {
  const Graph g = load_edge_list(a.file);
  const Spectrum s = laplacian_spectrum(g);
  const Rational avg = average_degree(g);
  const double avg_d = to_double(avg);
  const int sigma = g.connected() ? sigma_graph(g) : count_at_least(s, avg_d);
  const double energy = energy_from_spectrum(s, avg_d);

  if (a.format == "json") {
    nlohmann::json j{{"n", g.order()},           {"edges", g.size()}, {"avg_degree", avg_d},
                     {"avg_degree_exact", to_string(avg)}, {"sigma", sigma},    {"energy", energy},
                     {"spectrum", s.values}};
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "index,eigenvalue\n";
    for (std::size_t i = 0; i < s.size(); ++i) std::cout << i + 1 << "," << full(s[i]) << "\n";
  } else {
    std::cout << "n " << g.order() << "\nedges " << g.size() << "\navg_degree " << to_string(avg) << " ("
              << full(avg_d) << ")\nsigma " << sigma << "\nenergy " << full(energy) << " (" << fixed(energy, 5)
              << ")\nspectrum";
    for (double mu : s.values) std::cout << " " << full(mu);
    std::cout << "\nspectrum_5dp";
    for (double mu : s.values) std::cout << " " << fixed(mu, 5);
    std::cout << "\n";
  }
  return 0;
}

// ---- jt ------------------------------------------------------------------------

struct JtArgs {
  std::string file;
  std::string alpha = "0";
  int root = 1;
  bool table = false;
  std::string format = "text";
};

int run_jt(const JtArgs& a) {
  const Graph g = load_edge_list(a.file);
  if (classify(g) != GraphClass::tree) throw UsageError("jt needs a tree, got class " + to_string(classify(g)));
  const Rational alpha = parse_rational(a.alpha);
  const LocateResult r = jt_locate(RootedTree(g, a.root), alpha);
  if (a.format == "json") {
    nlohmann::json j{{"alpha", to_string(alpha)}, {"root", a.root}, {"above", r.above}, {"equal", r.equal},
                     {"below", r.below}};
    if (a.table) {
      nlohmann::json values = nlohmann::json::object();
      for (int v = 1; v <= g.order(); ++v) values[std::to_string(v)] = to_string(r.values[v - 1]);
      j["values"] = values;
      j["cut_edges"] = r.cut_edges;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "alpha " << to_string(alpha) << "\nabove " << r.above << "\nequal " << r.equal << "\nbelow "
              << r.below << "\n";
    if (a.table) {
      for (int v = 1; v <= g.order(); ++v) std::cout << "a(" << v << ") = " << to_string(r.values[v - 1]) << "\n";
    }
  }
  return 0;
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string claim;
  std::uint64_t seed = 1;
  int count = 500;
  std::string branches;
  int k = 0;
  int n_max = 30;
  bool long_odd = false;
  int ell = 4;
  int gamma = 2;
  std::string placement = "even";
  std::string extra;
  int k_max = 1000;
  std::string budget = "small";
  double tol = 0.0;
  std::string report;
};

Placement make_placement(const std::string& kind, const std::string& extra) {
  if (kind == "odd") {
    if (!extra.empty()) throw UsageError("--extra only applies to --placement even");
    return Placement::odd();
  }
  if (kind == "even") return Placement::even(extra.empty() ? std::vector<int>{} : parse_int_list(extra));
  throw UsageError("--placement must be 'even' or 'odd'");
}

double tol_or(const VerifyArgs& a, double fallback) { return a.tol > 0.0 ? a.tol : fallback; }

StarlikeSpec spec_from(const VerifyArgs& a) { return StarlikeSpec{parse_int_list(a.branches)}; }

int run_verify(const VerifyArgs& a) {
  std::vector<CheckReport> reports;
  const auto& c = a.claim;
  if (c == "spectral-replacement") {
    reports.push_back(check_spectral_replacement_random(a.seed, a.count, 6, 10, tol_or(a, 1e-8)));
  } else if (c == "dk-fk") {
    if (!a.branches.empty()) {
      const StarlikeSpec spec = spec_from(a);
      reports.push_back(check_dk_fk(build_starlike(spec), a.k > 0 ? a.k : spec.k(), tol_or(a, 1e-8)));
    } else {
      reports.push_back(check_dk_fk_random(a.seed, a.count, 8, 10, tol_or(a, 1e-8)));
    }
  } else if (c == "energy") {
    if (!a.branches.empty()) {
      const StarlikeSpec spec = spec_from(a);
      reports.push_back(check_energy_equality(spec, a.k > 0 ? a.k : spec.k(), tol_or(a, 1e-8)));
    } else {
      reports.push_back(check_energy_sweep(a.n_max, tol_or(a, 1e-8)));
    }
  } else if (c == "sigma") {
    if (!a.branches.empty()) {
      const StarlikeSpec spec = spec_from(a);
      reports.push_back(check_sigma(spec, a.k > 0 ? a.k : spec.k(), !a.long_odd));
    } else if (a.long_odd) {
      reports.push_back(check_sigma_long_odd(a.n_max));
    } else {
      reports.push_back(check_sigma_sweep(a.n_max));
    }
  } else if (c == "family") {
    reports.push_back(check_family(a.ell, a.gamma, make_placement(a.placement, a.extra), tol_or(a, 1e-8)));
  } else if (c == "trig") {
    reports.push_back(check_trig_identity(a.k_max, tol_or(a, 1e-12)));
  } else if (c == "all") {
    if (a.budget != "small" && a.budget != "full") throw UsageError("--budget must be 'small' or 'full'");
    reports = run_all(a.budget == "full" ? Budget::full : Budget::small, a.seed);
  } else {
    throw UsageError("unknown claim '" + c +
                     "' (expected spectral-replacement, dk-fk, energy, sigma, family, trig or all)");
  }

  nlohmann::json out = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    out.push_back(to_json(r));
    if (!r.passed && !r.observational) ok = false;
  }
  const fs::path report = a.report.empty() ? default_out_dir() / ("verify-" + c + ".json") : fs::path(a.report);
  if (report.has_parent_path()) fs::create_directories(report.parent_path());
  std::ofstream file(report);
  if (!file) throw UsageError("cannot write " + report.string());
  file << (reports.size() == 1 ? out[0] : out).dump(2) << "\n";

  std::cout << summary_table(reports);
  if (c == "family") {
    const auto& energies = reports.front().evidence.value("energies", nlohmann::json::array());
    if (!energies.empty()) std::cout << "energy " << fixed(energies[0].get<double>(), 5) << "\n";
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\nreport " << report.string() << "\n";
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian spectra, energies and equienergetic unicyclic families"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Construct a graph and write it as an edge list or DOT");
  build->require_subcommand(1);
  std::string output, format = "text";

  auto* starlike = build->add_subcommand("starlike", "Starlike tree from branch lengths");
  std::string branches;
  bool allow_long_odd = false;
  starlike->add_option("--branches", branches, "Branch vertex counts, e.g. 2,2,1")->required();
  starlike->add_flag("--allow-long-odd", allow_long_odd, "Do not require the odd branch to be shorter than n/2");

  auto* wcmd = build->add_subcommand("w", "G(G*, Ğ, y), optionally followed by E_z");
  std::string gstar, gbreve, ybits, zbits;
  int root = 1;
  wcmd->add_option("--gstar", gstar, "path:k | cycle:k | star:k | file:PATH")->required();
  wcmd->add_option("--gbreve", gbreve, "path:k | cycle:k | star:k | file:PATH")->required();
  wcmd->add_option("--root", root, "Root vertex of the --gbreve block")->check(CLI::PositiveNumber);
  wcmd->add_option("--y", ybits, "Adjacency vector, e.g. 111")->required();
  wcmd->add_option("--z", zbits, "Characteristic vector; applies E_z when given");

  for (auto* sub : {starlike, wcmd}) {
    sub->add_option("-o,--output", output, "Output file (stdout when omitted)");
    sub->add_option("--format", format, "text (edge list) or dot")->check(CLI::IsMember({"text", "dot"}));
  }

  auto* family = build->add_subcommand("family", "Base tree and ell equienergetic unicyclic graphs");
  int ell = 2, gamma = 1;
  std::string placement = "even", extra;
  std::string out_dir;
  family->add_option("--ell", ell, "Number of unicyclic members (>= 2)")->required();
  family->add_option("--gamma", gamma, "Order parameter, n = 2 ell^2 + 2 ell + 2 gamma (>= 1)");
  family->add_option("--placement", placement, "even: extra even branches; odd: grow the odd branch")
      ->check(CLI::IsMember({"even", "odd"}));
  family->add_option("--extra", extra, "Even extra branch lengths for --placement even, e.g. 4");
  family->add_option("--out-dir", out_dir, "Directory for graph files and manifest.json ($ULEQ_OUT_DIR or .)");

  // spectrum
  SpectrumArgs sargs;
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum, energy, sigma and average degree");
  spectrum->add_option("file", sargs.file, "Edge-list file")->required();
  spectrum->add_option("--format", sargs.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  // verify
  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Run a claim check and write a JSON report");
  verify->add_option("claim", vargs.claim, "spectral-replacement | dk-fk | energy | sigma | family | trig | all")
      ->required();
  verify->add_option("--seed", vargs.seed, "Seed for random instances");
  verify->add_option("--count", vargs.count, "Number of random instances")->check(CLI::PositiveNumber);
  verify->add_option("--branches", vargs.branches, "Single starlike spec instead of a sweep");
  verify->add_option("--k", vargs.k, "Even branch length to split off (defaults to the first branch)");
  verify->add_option("--nmax", vargs.n_max, "Largest order in sweeps")->check(CLI::PositiveNumber);
  verify->add_flag("--long-odd", vargs.long_odd, "Sigma experiment on odd branches >= n/2 (observational)");
  verify->add_option("--ell", vargs.ell, "Family parameter");
  verify->add_option("--gamma", vargs.gamma, "Family parameter");
  verify->add_option("--placement", vargs.placement, "even or odd");
  verify->add_option("--extra", vargs.extra, "Extra even branches for --placement even");
  verify->add_option("--kmax", vargs.k_max, "Largest k for the cosine identity")->check(CLI::PositiveNumber);
  verify->add_option("--budget", vargs.budget, "small or full (claim 'all')");
  verify->add_option("--tol", vargs.tol, "Tolerance override")->check(CLI::PositiveNumber);
  verify->add_option("--report", vargs.report, "Report path ($ULEQ_OUT_DIR/verify-<claim>.json)");

  // jt
  JtArgs jargs;
  auto* jt = app.add_subcommand("jt", "Count tree Laplacian eigenvalues above, at and below alpha exactly");
  jt->add_option("file", jargs.file, "Edge-list file of a tree")->required();
  jt->add_option("--alpha", jargs.alpha, "Exact shift: p/q, integer or decimal");
  jt->add_option("--root", jargs.root, "Root vertex")->check(CLI::PositiveNumber);
  jt->add_flag("--table", jargs.table, "Also print every final value a(v)");
  jt->add_option("--format", jargs.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*starlike) {
      emit_graph(build_starlike(StarlikeSpec{parse_int_list(branches)}, !allow_long_odd), output, format);
      return 0;
    }
    if (*wcmd) {
      const WStructure w = build_w(parse_graph_shorthand(gstar), parse_graph_shorthand(gbreve), root,
                                   parse_bits(ybits));
      emit_graph(zbits.empty() ? w.assembled : apply_ez(w, parse_bits(zbits)), output, format);
      return 0;
    }
    if (*family) {
      const auto fam = generate_family(ell, gamma, make_placement(placement, extra));
      const fs::path dir = out_dir.empty() ? default_out_dir() : fs::path(out_dir);
      write_family(dir, fam);
      std::cout << "n " << fam.order() << "\nbranches";
      for (int b : fam.base_spec.branch_lengths) std::cout << " " << b;
      std::cout << "\nplacement " << to_string(fam.placement) << "\nwrote " << fam.members.size() + 1
                << " graphs and manifest.json to " << dir.string() << "\n";
      return 0;
    }
    if (*spectrum) return run_spectrum(sargs);
    if (*verify) return run_verify(vargs);
    if (*jt) return run_jt(jargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
