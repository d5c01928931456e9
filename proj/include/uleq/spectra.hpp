#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uleq/graph.hpp"

namespace uleq {

/// 0/1 vector indexed 0..k-1 (entry i-1 stands for vertex label i of G*).
using BinaryVector = std::vector<std::uint8_t>;

BinaryVector unit_vector(int k, int i);  // e_i, 1-based i
int popcount(const BinaryVector& v);
/// Parses "10110" style strings. Throws std::invalid_argument on other chars.
BinaryVector parse_bits(const std::string& text);
std::string to_string(const BinaryVector& v);

inline constexpr double kDefaultSpectrumTol = 1e-9;

/// Real multiset kept sorted in descending order, with the absolute tolerance
/// used when its elements are matched against another spectrum.
struct Spectrum {
  std::vector<double> values;
  double tol = kDefaultSpectrumTol;

  Spectrum() = default;
  explicit Spectrum(std::vector<double> v, double tolerance = kDefaultSpectrumTol);

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  double operator[](std::size_t i) const { return values[i]; }
  double sum() const;
  /// Number of elements within tol of x.
  int multiplicity(double x, double tolerance) const;
  int multiplicity(double x) const { return multiplicity(x, tol); }
};

/// Raised when an element to be removed has no partner within tolerance.
class SpectrumMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is below this times ||m||_F.
  double relative_threshold = 1e-14;
  int max_sweeps = 100;
};

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
/// Works on a private copy. Throws ConvergenceError if the sweep budget runs
/// out, std::invalid_argument on an empty matrix.
Spectrum sym_eigenvalues(const SymmetricMatrix& m, const JacobiOptions& options = {});

Spectrum laplacian_spectrum(const Graph& g);

/// Number of values >= threshold, where anything >= threshold - tol counts.
int count_at_least(const Spectrum& s, double threshold, double tol = kDefaultSpectrumTol);

/// sum |mu_i - avg|.
double energy_from_spectrum(const Spectrum& s, double average_degree);
/// 2 * (mu_1 + ... + mu_sigma) - 2 * sigma * avg.
double energy_sigma_form(const Spectrum& s, double average_degree, int sigma);

double laplacian_energy(const Graph& g);

/// Corner-perturbed tridiagonal Toeplitz matrix of order s: main diagonal b,
/// sub-diagonal a, super-diagonal c, with alpha subtracted from the first
/// diagonal entry and beta from the last.
struct TridiagonalSpec {
  double a = -1.0;
  double b = 2.0;
  double c = -1.0;
  double alpha = 1.0;
  double beta = 0.0;
  int s = 1;
};

/// Closed form {b + 2 alpha cos(2 j pi / (2s + 1)) : j = 1..s}. Requires
/// |alpha| = sqrt(a c) != 0 and beta = 0 (std::invalid_argument otherwise).
Spectrum tridiagonal_spectrum(const TridiagonalSpec& t);

/// Explicit matrix for t. Only the symmetric case a == c can be assembled.
SymmetricMatrix tridiagonal_matrix(const TridiagonalSpec& t);

/// D_k = {2 + 2cos(2 j pi/(2k+1))} and F_k = {2 - 2cos(2 j pi/(2k+1))}.
std::pair<Spectrum, Spectrum> dk_fk(int k);

/// L(gstar) + E_y: the k x k block that the two copies of gstar contribute.
SymmetricMatrix attachment_block(const Graph& gstar, const BinaryVector& y);
/// H + 2 E_z.
SymmetricMatrix inserted_block(const SymmetricMatrix& h, const BinaryVector& z);

/// Removes one occurrence per element of d, each matched greedily to the
/// nearest remaining element of s. Tolerance is s.tol. Throws
/// SpectrumMismatch when some element of d has no partner.
Spectrum multiset_remove(const Spectrum& s, const Spectrum& d);
/// Multiset sum; keeps a.tol.
Spectrum multiset_union(const Spectrum& a, const Spectrum& b);

/// Same size and |s1[i] - s2[i]| <= tol pairwise (tol = max of the two).
bool cospectral(const Spectrum& s1, const Spectrum& s2);

/// Largest |s1[i] - s2[i]|, infinity when sizes differ.
double max_abs_difference(const Spectrum& s1, const Spectrum& s2);

/// Energy change LE(g2) - LE(g) via the shared-sigma formula
///   2 * sum_{i<=sigma} (mu_i(g2) - mu_i(g)) - 4 sigma (e(g2) - e(g)) / n.
/// Throws std::invalid_argument if the orders differ and std::domain_error if
/// the two graphs have different sigma.
double delta_le(const Graph& g, const Graph& g2);

}  // namespace uleq
