#ifndef NCORTHO_SZEGO_KERNELS_HPP
#define NCORTHO_SZEGO_KERNELS_HPP

#include <vector>

#include "ncortho/ncpoly.hpp"
#include "ncortho/schur_params.hpp"
#include "ncortho/word.hpp"

namespace ncortho {

// Point of the sequence ball: z_0 .. z_{count-1}, all of modulus < 1.
class PointB1 {
public:
  explicit PointB1(std::vector<cx> z);
  int count() const { return static_cast<int>(z_.size()); }
  cx at(int i) const { return z_[static_cast<size_t>(i)]; }

private:
  std::vector<cx> z_;
};

// Kernel section S_z as a (count+1) x (count+1) lower triangular array:
// entry (k, j) = conj(z_j) ... conj(z_{k-1}) below the unit diagonal.
Matrix s_z_array(const PointB1& z);

// Diagonal sequence S(z, w)_n = c_n(S_z)* c_n(S_w).
Vector szego_eval(const PointB1& z, const PointB1& w);

// Point evaluation Theta(z)_n = Theta_{n,n} + sum_{k>n} Theta_{k,n} z_{k-1}..z_n.
Vector h2_eval(const Matrix& theta, const PointB1& z);
// Same value through the reproducing identity <Theta, S_z>.
Vector h2_eval_reproducing(const Matrix& theta, const PointB1& z);

// Tuple of equal-size square operators with sum Z_k Z_k* strictly below I.
class OperatorPoint {
public:
  explicit OperatorPoint(std::vector<Matrix> z);
  int variables() const { return static_cast<int>(z_.size()); }
  int dim() const { return static_cast<int>(z_[0].rows()); }
  const Matrix& component(int k) const { return z_[static_cast<size_t>(k)]; }
  // Minimum eigenvalue of I - sum Z_k Z_k*; positive by construction.
  double membership_margin() const;
  // Z_sigma = Z_{i_1} ... Z_{i_k}; identity for the empty word.
  Matrix word_product(const Word& sigma) const;

private:
  std::vector<Matrix> z_;
};

// Stacked column of the blocks (Z_sigma)* over words of length <= max_len.
Matrix fock_szego_array(const OperatorPoint& z, int max_len);
// S(Z, W) = S_Z* S_W.
Matrix fock_szego_kernel(const OperatorPoint& z, const OperatorPoint& w, int max_len);
// Evaluation sum_sigma Z_sigma Theta_sigma of a stacked coefficient column.
Vector fock_eval(const OperatorPoint& z, const Matrix& theta_stacked, int max_len);
// Evaluation of a scalar-coefficient polynomial as an operator.
Matrix fock_eval_poly(const OperatorPoint& z, const NCPoly& poly);

// Point of the Siegel upper half-space; the last component plays the role
// of the distinguished variable.
class SiegelPoint {
public:
  explicit SiegelPoint(std::vector<Matrix> w);
  int variables() const { return static_cast<int>(w_.size()); }
  int dim() const { return static_cast<int>(w_[0].rows()); }
  const Matrix& component(int k) const { return w_[static_cast<size_t>(k)]; }
  // Minimum eigenvalue of (W_N - W_N*)/(2i) - sum_{k<N} W_k W_k*.
  double membership_margin() const;

private:
  std::vector<Matrix> w_;
};

SiegelPoint cayley(const OperatorPoint& z);
OperatorPoint cayley_inverse(const SiegelPoint& w);
Matrix siegel_kernel(const SiegelPoint& w, const SiegelPoint& w_prime, int max_len);

}  // namespace ncortho

#endif
