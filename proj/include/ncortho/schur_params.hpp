#ifndef NCORTHO_SCHUR_PARAMS_HPP
#define NCORTHO_SCHUR_PARAMS_HPP

#include <Eigen/Dense>
#include <vector>

#include "ncortho/types.hpp"

namespace ncortho {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Schur-type parameters of a strictly positive definite kernel on 0..horizon:
// a positive diagonal s_{k,k} and one strict contraction gamma_{k,j} per pair
// k < j. The kernel they generate is recovered by moments_from_params.
class GammaParams1D {
public:
  GammaParams1D() : horizon_(0), diag_(1, 1.0) {}
  explicit GammaParams1D(int horizon);
  GammaParams1D(std::vector<double> diag, const std::vector<std::vector<cx>>& gamma);

  int horizon() const { return horizon_; }
  double diag(int k) const { return diag_[static_cast<size_t>(k)]; }
  const std::vector<double>& diag() const { return diag_; }
  cx gamma(int k, int j) const { return gamma_[pair_index(k, j)]; }
  double d(int k, int j) const { return defect(gamma(k, j)); }

  void set_diag(int k, double value);
  void set_gamma(int k, int j, cx value);

  bool operator==(const GammaParams1D& rhs) const = default;

private:
  size_t pair_index(int k, int j) const;
  int horizon_;
  std::vector<double> diag_;
  std::vector<cx> gamma_;  // packed over pairs k < j
};

// Finite section of a kernel of moments: a hermitian matrix expected to be
// (strictly) positive definite.
class MomentKernel1D {
public:
  MomentKernel1D() : entries_(Matrix::Identity(1, 1)) {}
  explicit MomentKernel1D(Matrix entries);

  int horizon() const { return static_cast<int>(entries_.rows()) - 1; }
  const Matrix& matrix() const { return entries_; }
  cx operator()(int k, int j) const { return entries_(k, j); }

private:
  Matrix entries_;
};

// Lower triangular array with nonnegative diagonal.
class TriangularArray {
public:
  TriangularArray() : entries_(Matrix::Identity(1, 1)) {}
  explicit TriangularArray(Matrix entries);

  int horizon() const { return static_cast<int>(entries_.rows()) - 1; }
  const Matrix& matrix() const { return entries_; }
  cx operator()(int k, int j) const { return entries_(k, j); }

private:
  Matrix entries_;
};

// One symbolic summand of a lattice expansion: sign times a product of
// gamma / conj(gamma) / d factors, each attached to a pair (k, j).
struct LatticeMonomial {
  enum class Factor : std::uint8_t { Gamma, GammaConj, D };
  struct Term {
    Factor factor;
    int k, j;
    auto operator<=>(const Term&) const = default;
  };
  int sign = 1;
  std::vector<Term> terms;  // kept sorted by (k, j, factor)

  cx evaluate(const GammaParams1D& p) const;
  std::string str() const;
  auto operator<=>(const LatticeMonomial&) const = default;
};

// 2x2 unitary [[gamma, d], [d, -conj(gamma)]] of a strict contraction.
Matrix julia(const cx& gamma);

// Forward map: kernel of moments generated by the parameters. Entries are
// computed column by column through the lattice recursion; columns are
// independent and run in parallel.
MomentKernel1D moments_from_params(const GammaParams1D& p);

namespace ref {
// Serial reference for moments_from_params, kept for tests and benchmarks.
MomentKernel1D moments_from_params(const GammaParams1D& p);
}  // namespace ref

// Literal product of embedded Julia operators for a pair k < j. Used by the
// unitarity tests; the forward map itself only tracks first columns.
Matrix unitary_product(const GammaParams1D& p, int k, int j);

// Inverse map. Solves for gamma_{k,j} in increasing offset order using that
// each moment is affine in its top parameter. Throws on kernels that are not
// strictly positive definite.
GammaParams1D params_from_moments(const MomentKernel1D& kernel);

// det [s_{k,j}]_{l <= k,j <= m} evaluated from the parameters alone.
double det_principal(const GammaParams1D& p, int l, int m);

// Correction product linking D_{l,m} D_{n,n'} with D_{l,n'} D_{n,m}.
double fisher_hadamard(const GammaParams1D& p, int l, int n, int n_prime, int m);

// Symbolic expansion of s_{0,l} / (s_00 s_ll)^(1/2); the number of summands
// is the Catalan number C_l.
std::vector<LatticeMonomial> lattice_expand(int offset);
std::int64_t catalan_count(int offset);

// Cholesky-type factor: lower triangular, nonnegative diagonal, K = T T*.
TriangularArray spectral_factor(const MomentKernel1D& kernel);

// Triangular factor in column-support convention: lower triangular with
// column j supported on rows >= j and K = T* T. Its diagonal carries the
// per-index Szego products s_kk^(1/2) prod_{n>k} d_{k,n}.
TriangularArray outer_factor(const MomentKernel1D& kernel);

// Truncated Szego-class margin: min over k of s_kk^(1/2) prod_{n>k} d_{k,n}.
double szego_class_margin(const GammaParams1D& p);

}  // namespace ncortho

#endif
