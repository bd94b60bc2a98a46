#ifndef NCORTHO_FOCK_MULTIVAR_HPP
#define NCORTHO_FOCK_MULTIVAR_HPP

#include <map>
#include <vector>

#include "ncortho/ncpoly.hpp"
#include "ncortho/schur_params.hpp"
#include "ncortho/szego_kernels.hpp"
#include "ncortho/word.hpp"

namespace ncortho {

// Parameters of a Cuntz-Toeplitz kernel: one strict contraction gamma_sigma
// per nonempty word up to max_len, plus the value at the empty pair.
class GammaParamsCT {
public:
  GammaParamsCT(int alphabet, int max_len, double s_empty = 1.0);

  int alphabet() const { return alphabet_; }
  int max_len() const { return max_len_; }
  double s_empty() const { return s_empty_; }
  cx gamma(const Word& sigma) const;
  double d(const Word& sigma) const { return defect(gamma(sigma)); }
  void set_gamma(const Word& sigma, cx value);

  // All words of length <= max_len in graded-lex order.
  const std::vector<Word>& words() const { return words_; }

private:
  int alphabet_, max_len_;
  double s_empty_;
  std::vector<Word> words_;
  std::vector<cx> gamma_;  // indexed by word rank; rank 0 unused
};

// Sparse kernel on pairs of words: nonzero only when one word left-divides
// the other, invariant under common left factors.
class CTKernel {
public:
  CTKernel(int alphabet, int max_len) : alphabet_(alphabet), max_len_(max_len) {}

  int alphabet() const { return alphabet_; }
  int max_len() const { return max_len_; }
  cx at(const Word& sigma, const Word& tau) const;
  void set(const Word& sigma, const Word& tau, cx value);
  size_t stored_entries() const { return entries_.size(); }

  // Dense matrix over the graded-lex enumeration; test oracle.
  Matrix dense() const;

private:
  int alphabet_, max_len_;
  std::map<std::pair<std::int64_t, std::int64_t>, cx> entries_;
};

// The word-enumerated one-variable parameters induced by CT data:
// gamma_{u,v} = gamma_beta when v = u beta, zero otherwise.
GammaParams1D induced_params(const GammaParamsCT& p);

CTKernel ct_kernel_from_gamma(const GammaParamsCT& p);

// Orthonormal polynomials phi_sigma and companions phi#_sigma over words.
struct WordPolyFamily {
  std::map<Word, NCPoly, WordOrder> phi;
  std::map<Word, NCPoly, WordOrder> phisharp;
};
WordPolyFamily ct_ortho_recurrence(const GammaParamsCT& p);

// Truncated isometric step W_k of the Kolmogorov decomposition; requires a
// unit diagonal. size bounds the matrix truncation.
Matrix kolmogorov_W(const GammaParams1D& p, int k, int size);

// Vectors V(0..count-1), V(k) = W_0 ... W_{k-1} e_0, truncated at
// horizon + 1 coordinates.
std::vector<Vector> kolmogorov_V(const GammaParams1D& p, int count);

// Truncated isometries U(1..N) on the enumerated word space, columns indexed
// by words of length <= max_len - 1.
std::vector<Matrix> cuntz_isometries(const GammaParamsCT& p);

// Partial product of the defects over all stored words; the Cuntz regime
// corresponds to the infinite product vanishing.
double cuntz_condition(const GammaParamsCT& p);

// The 2|sigma| matrix-unit tuples with Z^p_sigma prescribed and Z^p_tau = 0
// for every other tau at least as long as sigma. Each tuple is a strict row
// contraction on E = E_1^{2|sigma|}.
std::vector<OperatorPoint> matrix_unit_tuples(const Word& sigma, int dim_factor);

}  // namespace ncortho

#endif
