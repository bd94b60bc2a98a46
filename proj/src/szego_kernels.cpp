#include "ncortho/szego_kernels.hpp"

#include <Eigen/Eigenvalues>

namespace ncortho {

PointB1::PointB1(std::vector<cx> z) : z_(std::move(z)) {
  for (const cx& v : z_) require_strict_contraction(v, "PointB1");
}

Matrix s_z_array(const PointB1& z) {
  const int n = z.count() + 1;
  Matrix s = Matrix::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    cx prod(1.0, 0.0);
    for (int k = j + 1; k < n; ++k) {
      prod *= std::conj(z.at(k - 1));
      s(k, j) = prod;
    }
  }
  return s;
}

Vector szego_eval(const PointB1& z, const PointB1& w) {
  if (z.count() != w.count()) throw invalid_input("szego_eval: horizon mismatch");
  const Matrix sz = s_z_array(z);
  const Matrix sw = s_z_array(w);
  const int n = static_cast<int>(sz.rows());
  Vector diag(n);
  for (int m = 0; m < n; ++m) diag(m) = sz.col(m).dot(sw.col(m));
  return diag;
}

Vector h2_eval(const Matrix& theta, const PointB1& z) {
  const int n = static_cast<int>(theta.rows());
  if (n != z.count() + 1) throw invalid_input("h2_eval: size mismatch");
  Vector out(n);
  for (int m = 0; m < n; ++m) {
    cx acc = theta(m, m);
    cx prod(1.0, 0.0);
    for (int k = m + 1; k < n; ++k) {
      prod *= z.at(k - 1);
      acc += theta(k, m) * prod;
    }
    out(m) = acc;
  }
  return out;
}

Vector h2_eval_reproducing(const Matrix& theta, const PointB1& z) {
  const Matrix sz = s_z_array(z);
  if (theta.rows() != sz.rows()) throw invalid_input("h2_eval_reproducing: size mismatch");
  const int n = static_cast<int>(sz.rows());
  Vector out(n);
  for (int m = 0; m < n; ++m) out(m) = sz.col(m).dot(theta.col(m));
  return out;
}

OperatorPoint::OperatorPoint(std::vector<Matrix> z) : z_(std::move(z)) {
  if (z_.empty()) throw invalid_input("OperatorPoint: need at least one operator");
  const Eigen::Index d = z_[0].rows();
  for (const Matrix& m : z_)
    if (m.rows() != d || m.cols() != d)
      throw invalid_input("OperatorPoint: operators must be square of equal size");
  if (!(membership_margin() > 0.0))
    throw invalid_input("OperatorPoint: sum Z_k Z_k* must be strictly below I");
}

double OperatorPoint::membership_margin() const {
  Matrix acc = Matrix::Identity(dim(), dim());
  for (const Matrix& m : z_) acc -= m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (acc + acc.adjoint()));
  return es.eigenvalues().minCoeff();
}

Matrix OperatorPoint::word_product(const Word& sigma) const {
  Matrix out = Matrix::Identity(dim(), dim());
  for (int i = 0; i < sigma.length(); ++i)
    out = out * z_[static_cast<size_t>(sigma.letter(i) - 1)];
  return out;
}

Matrix fock_szego_array(const OperatorPoint& z, int max_len) {
  const std::vector<Word> words = enumerate_words(z.variables(), max_len);
  const int d = z.dim();
  Matrix s(static_cast<Eigen::Index>(words.size()) * d, d);
  for (size_t i = 0; i < words.size(); ++i)
    s.block(static_cast<Eigen::Index>(i) * d, 0, d, d) =
        z.word_product(words[i]).adjoint();
  return s;
}

Matrix fock_szego_kernel(const OperatorPoint& z, const OperatorPoint& w, int max_len) {
  if (z.variables() != w.variables() || z.dim() != w.dim())
    throw invalid_input("fock_szego_kernel: mismatched tuples");
  return fock_szego_array(z, max_len).adjoint() * fock_szego_array(w, max_len);
}

Vector fock_eval(const OperatorPoint& z, const Matrix& theta_stacked, int max_len) {
  const std::vector<Word> words = enumerate_words(z.variables(), max_len);
  const int d = z.dim();
  if (theta_stacked.rows() != static_cast<Eigen::Index>(words.size()) * d ||
      theta_stacked.cols() != 1)
    throw invalid_input("fock_eval: stacked coefficient size mismatch");
  Vector acc = Vector::Zero(d);
  for (size_t i = 0; i < words.size(); ++i)
    acc += z.word_product(words[i]) *
           theta_stacked.block(static_cast<Eigen::Index>(i) * d, 0, d, 1);
  return acc;
}

Matrix fock_eval_poly(const OperatorPoint& z, const NCPoly& poly) {
  Matrix acc = Matrix::Zero(z.dim(), z.dim());
  for (const auto& [word, coeff] : poly.coeffs()) acc += coeff * z.word_product(word);
  return acc;
}

SiegelPoint::SiegelPoint(std::vector<Matrix> w) : w_(std::move(w)) {
  if (w_.empty()) throw invalid_input("SiegelPoint: need at least one operator");
  const Eigen::Index d = w_[0].rows();
  for (const Matrix& m : w_)
    if (m.rows() != d || m.cols() != d)
      throw invalid_input("SiegelPoint: operators must be square of equal size");
}

double SiegelPoint::membership_margin() const {
  const Matrix& wn = w_.back();
  Matrix gap = (wn - wn.adjoint()) / cx(0.0, 2.0);
  for (size_t k = 0; k + 1 < w_.size(); ++k) gap -= w_[k] * w_[k].adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (gap + gap.adjoint()));
  return es.eigenvalues().minCoeff();
}

SiegelPoint cayley(const OperatorPoint& z) {
  const int n = z.variables();
  const int d = z.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix zn = z.component(n - 1);
  Eigen::PartialPivLU<Matrix> lu(id + zn);
  std::vector<Matrix> w;
  for (int k = 0; k + 1 < n; ++k) w.push_back(lu.solve(z.component(k)));
  w.push_back(cx(0.0, 1.0) * lu.solve(id - zn));
  return SiegelPoint(std::move(w));
}

OperatorPoint cayley_inverse(const SiegelPoint& w) {
  const int n = w.variables();
  const int d = w.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix wn = w.component(n - 1);
  // From W_N = i (I + Z_N)^{-1} (I - Z_N): Z_N (iI + W_N) = iI - W_N, a
  // right division solved through the transposed system.
  Matrix zn = (cx(0.0, 1.0) * id + wn).transpose().partialPivLu()
                  .solve(((cx(0.0, 1.0) * id - wn).transpose()).eval())
                  .transpose();
  std::vector<Matrix> z;
  for (int k = 0; k + 1 < n; ++k) z.push_back((id + zn) * w.component(k));
  z.push_back(zn);
  return OperatorPoint(std::move(z));
}

Matrix siegel_kernel(const SiegelPoint& w, const SiegelPoint& w_prime, int max_len) {
  auto f_of = [max_len](const SiegelPoint& pt) {
    const OperatorPoint z = cayley_inverse(pt);
    const Matrix s = fock_szego_array(z, max_len);
    const int d = z.dim();
    const Matrix factor = 2.0 * (cx(0.0, -1.0) * Matrix::Identity(d, d) +
                                 pt.component(pt.variables() - 1).adjoint());
    Matrix out(s.rows(), s.cols());
    // Block-diagonal repetition of the factor across the word-indexed stack.
    for (Eigen::Index b = 0; b * d < s.rows(); ++b)
      out.block(b * d, 0, d, d) = factor * s.block(b * d, 0, d, d);
    return out;
  };
  return f_of(w).adjoint() * f_of(w_prime);
}

}  // namespace ncortho
