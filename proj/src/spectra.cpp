#include "uleq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace uleq {

BinaryVector unit_vector(int k, int i) {
  if (k < 1 || i < 1 || i > k) throw std::invalid_argument("unit vector index out of range");
  BinaryVector v(k, 0);
  v[i - 1] = 1;
  return v;
}

int popcount(const BinaryVector& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](auto b) { return b != 0; }));
}

BinaryVector parse_bits(const std::string& text) {
  BinaryVector v;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit vector may only contain 0 and 1: '" + text + "'");
    v.push_back(ch == '1' ? 1 : 0);
  }
  if (v.empty()) throw std::invalid_argument("empty bit vector");
  return v;
}

std::string to_string(const BinaryVector& v) {
  std::string s;
  for (auto b : v) s.push_back(b ? '1' : '0');
  return s;
}

Spectrum::Spectrum(std::vector<double> v, double tolerance) : values(std::move(v)), tol(tolerance) {
  std::sort(values.begin(), values.end(), std::greater<>());
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

int Spectrum::multiplicity(double x, double tolerance) const {
  return static_cast<int>(
      std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(v - x) <= tolerance; }));
}

Spectrum sym_eigenvalues(const SymmetricMatrix& m, const JacobiOptions& options) {
  const int n = m.order();
  if (n < 1) throw std::invalid_argument("eigenvalues of an empty matrix");
  std::vector<double> a = m.data();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  const double norm = m.frobenius_norm();
  const double target = options.relative_threshold * norm;

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    if (off_norm() <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Negligible against both diagonal entries: drop without rotating.
        if (sweep > 3 && std::abs(apq) * 1e17 < std::abs(app) && std::abs(apq) * 1e17 < std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          at(r, p) = at(p, r) = new_rp;
          at(r, q) = at(q, r) = new_rq;
        }
      }
    }
  }
  if (sweep == options.max_sweeps && off_norm() > target) {
    throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                           " sweeps (order " + std::to_string(n) + ")");
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  return Spectrum(std::move(eig));
}

Spectrum laplacian_spectrum(const Graph& g) { return sym_eigenvalues(laplacian(g)); }

int count_at_least(const Spectrum& s, double threshold, double tol) {
  return static_cast<int>(
      std::count_if(s.values.begin(), s.values.end(), [&](double v) { return v >= threshold - tol; }));
}

double energy_from_spectrum(const Spectrum& s, double average_degree) {
  double e = 0.0;
  for (double mu : s.values) e += std::abs(mu - average_degree);
  return e;
}

double energy_sigma_form(const Spectrum& s, double average_degree, int sigma) {
  double top = 0.0;
  for (int i = 0; i < sigma; ++i) top += s[i];
  return 2.0 * top - 2.0 * sigma * average_degree;
}

double laplacian_energy(const Graph& g) {
  return energy_from_spectrum(laplacian_spectrum(g), to_double(average_degree(g)));
}

Spectrum tridiagonal_spectrum(const TridiagonalSpec& t) {
  if (t.s < 1) throw std::invalid_argument("tridiagonal order must be positive");
  if (t.a * t.c <= 0.0) throw std::invalid_argument("closed form needs a*c > 0");
  const double root = std::sqrt(t.a * t.c);
  if (std::abs(std::abs(t.alpha) - root) > 1e-12 * std::max(1.0, root) || t.alpha == 0.0) {
    throw std::invalid_argument("closed form needs |alpha| = sqrt(a*c)");
  }
  if (t.beta != 0.0) throw std::invalid_argument("closed form needs beta = 0");
  std::vector<double> v;
  v.reserve(t.s);
  for (int j = 1; j <= t.s; ++j) {
    v.push_back(t.b + 2.0 * t.alpha * std::cos(2.0 * j * std::numbers::pi / (2.0 * t.s + 1.0)));
  }
  return Spectrum(std::move(v));
}

SymmetricMatrix tridiagonal_matrix(const TridiagonalSpec& t) {
  if (t.s < 1) throw std::invalid_argument("tridiagonal order must be positive");
  if (t.a != t.c) throw std::invalid_argument("only a == c gives a symmetric matrix");
  SymmetricMatrix m(t.s);
  for (int i = 0; i < t.s; ++i) m.set(i, i, t.b);
  for (int i = 0; i + 1 < t.s; ++i) m.set(i, i + 1, t.a);
  m.add(0, 0, -t.alpha);
  m.add(t.s - 1, t.s - 1, -t.beta);
  return m;
}

std::pair<Spectrum, Spectrum> dk_fk(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  TridiagonalSpec t{.a = -1.0, .b = 2.0, .c = -1.0, .alpha = 1.0, .beta = 0.0, .s = k};
  Spectrum d = tridiagonal_spectrum(t);
  t.alpha = -1.0;
  Spectrum f = tridiagonal_spectrum(t);
  return {std::move(d), std::move(f)};
}

SymmetricMatrix attachment_block(const Graph& gstar, const BinaryVector& y) {
  if (static_cast<int>(y.size()) != gstar.order()) {
    throw std::invalid_argument("adjacency vector length " + std::to_string(y.size()) +
                                " does not match |G*| = " + std::to_string(gstar.order()));
  }
  SymmetricMatrix h = laplacian(gstar);
  for (int i = 0; i < gstar.order(); ++i) {
    if (y[i]) h.add(i, i, 1.0);
  }
  return h;
}

SymmetricMatrix inserted_block(const SymmetricMatrix& h, const BinaryVector& z) {
  if (static_cast<int>(z.size()) != h.order()) throw std::invalid_argument("characteristic vector has wrong length");
  SymmetricMatrix out = h;
  for (int i = 0; i < h.order(); ++i) {
    if (z[i]) out.add(i, i, 2.0);
  }
  return out;
}

Spectrum multiset_remove(const Spectrum& s, const Spectrum& d) {
  std::vector<bool> used(s.size(), false);
  for (double x : d.values) {
    std::size_t best = s.size();
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (used[i]) continue;
      double gap = std::abs(s[i] - x);
      if (gap < best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    if (best == s.size() || best_gap > s.tol) {
      throw SpectrumMismatch("no element within " + std::to_string(s.tol) + " of " + std::to_string(x));
    }
    used[best] = true;
  }
  std::vector<double> rest;
  rest.reserve(s.size() - d.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!used[i]) rest.push_back(s[i]);
  }
  return Spectrum(std::move(rest), s.tol);
}

Spectrum multiset_union(const Spectrum& a, const Spectrum& b) {
  std::vector<double> v = a.values;
  v.insert(v.end(), b.values.begin(), b.values.end());
  return Spectrum(std::move(v), a.tol);
}

double max_abs_difference(const Spectrum& s1, const Spectrum& s2) {
  if (s1.size() != s2.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < s1.size(); ++i) worst = std::max(worst, std::abs(s1[i] - s2[i]));
  return worst;
}

bool cospectral(const Spectrum& s1, const Spectrum& s2) {
  return max_abs_difference(s1, s2) <= std::max(s1.tol, s2.tol);
}

double delta_le(const Graph& g, const Graph& g2) {
  if (g.order() != g2.order()) throw std::invalid_argument("delta_le needs graphs of equal order");
  const int n = g.order();
  const Spectrum s = laplacian_spectrum(g);
  const Spectrum s2 = laplacian_spectrum(g2);
  const int sigma = count_at_least(s, to_double(average_degree(g)));
  const int sigma2 = count_at_least(s2, to_double(average_degree(g2)));
  if (sigma != sigma2) {
    throw std::domain_error("sigma differs (" + std::to_string(sigma) + " vs " + std::to_string(sigma2) +
                            "); the shared-sigma energy formula does not apply");
  }
  double top = 0.0;
  for (int i = 0; i < sigma; ++i) top += s2[i] - s[i];
  const int delta_e = g2.size() - g.size();
  return 2.0 * top - 4.0 * sigma * delta_e / static_cast<double>(n);
}

}  // namespace uleq
