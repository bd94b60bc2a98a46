#ifndef NCORTHO_HERMITIAN_JACOBI_HPP
#define NCORTHO_HERMITIAN_JACOBI_HPP

#include <map>
#include <vector>

#include "ncortho/ncpoly.hpp"
#include "ncortho/schur_params.hpp"
#include "ncortho/word.hpp"

namespace ncortho {

// Moments s_sigma = phi(Y_sigma) of a unital functional on hermitian
// noncommuting variables, stored for |sigma| <= 2 max_len.
class HermitianMoments {
public:
  HermitianMoments(int alphabet, int max_len);

  int alphabet() const { return alphabet_; }
  int max_len() const { return max_len_; }
  cx at(const Word& sigma) const;
  void set(const Word& sigma, cx value);

  // Gram matrix [s_{I(alpha) beta}] over words of length <= level.
  Matrix gram(int level) const;

private:
  int alphabet_, max_len_;
  std::map<Word, cx, WordOrder> s_;
};

// Inner product <P, Q>_phi = sum conj(Q_alpha) P_beta s_{I(alpha) beta}.
cx nc_inner(const NCPoly& p, const NCPoly& q, const HermitianMoments& m);

// Block coefficients of the three-term relations. Level n of A holds the
// selfadjoint N^n x N^n matrices A_{n,k}; level n of B the N^{n+1} x N^n
// matrices B_{n,k}. depth() is the number of stored levels.
class JacobiFamily {
public:
  JacobiFamily(int alphabet, int depth);

  int alphabet() const { return alphabet_; }
  int depth() const { return depth_; }
  const Matrix& A(int n, int k) const { return a_[idx(n, k)]; }
  const Matrix& B(int n, int k) const { return b_[idx(n, k)]; }
  void set_A(int n, int k, Matrix m);
  void set_B(int n, int k, Matrix m);

  // Stacked [B_{n,1} ... B_{n,N}], square of size N^{n+1}.
  Matrix stacked_B(int n) const;

  // Checks selfadjointness of A, upper triangularity of the stacked B and a
  // positive real diagonal (the canonical normalization).
  void validate(double tolerance = 1e-9) const;

private:
  size_t idx(int n, int k) const;
  int alphabet_, depth_;
  std::vector<Matrix> a_, b_;
};

// Graded-lex Gram-Schmidt of the words under the moment inner product.
std::vector<NCPoly> gram_schmidt_nc(const HermitianMoments& m, int level);

// Recovers the three-term blocks from an orthonormal family.
JacobiFamily extract_jacobi(const std::vector<NCPoly>& phis, const HermitianMoments& m);

// Rebuilds the orthonormal family from the blocks; inverse of extraction.
std::vector<NCPoly> favard_reconstruct(const JacobiFamily& j);

// Block tridiagonal matrix of J_k over words of length <= max_level; blocks
// beyond the stored depth are zero.
Matrix jacobi_matrix(const JacobiFamily& j, int k, int max_level);

// phi(Y_sigma) as the (empty, empty) entry of the truncated product; exact
// at truncation level |sigma| since each factor moves levels by at most one.
cx gns_moments(const JacobiFamily& j, const Word& sigma);

// All moments with |sigma| <= 2 max_len; per-word products run in parallel.
HermitianMoments moments_from_jacobi(const JacobiFamily& j, int max_len);

namespace ref {
// Serial reference, kept for tests and benchmarks.
HermitianMoments moments_from_jacobi(const JacobiFamily& j, int max_len);
}  // namespace ref

struct FavardReport {
  double max_block_error;  // extracted blocks vs input
  double max_coeff_error;  // Gram-Schmidt family vs reconstructed family
  bool ok(double tolerance) const {
    return max_block_error <= tolerance && max_coeff_error <= tolerance;
  }
};
FavardReport favard_roundtrip(const JacobiFamily& j);

}  // namespace ncortho

#endif
