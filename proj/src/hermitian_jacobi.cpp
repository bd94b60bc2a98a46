#include "ncortho/hermitian_jacobi.hpp"

#include <cmath>

#include "ncortho/parallel.hpp"

namespace ncortho {

namespace {

std::int64_t level_size(int alphabet, int n) {
  std::int64_t s = 1;
  for (int i = 0; i < n; ++i) s *= alphabet;
  return s;
}

}  // namespace

HermitianMoments::HermitianMoments(int alphabet, int max_len)
    : alphabet_(alphabet), max_len_(max_len) {
  if (alphabet < 1 || max_len < 0) throw invalid_input("HermitianMoments: bad sizes");
  set(Word(alphabet), cx(1.0, 0.0));
}

cx HermitianMoments::at(const Word& sigma) const {
  auto it = s_.find(sigma);
  if (it == s_.end())
    throw invalid_input("HermitianMoments: moment for word '" + sigma.str() +
                        "' not available");
  return it->second;
}

void HermitianMoments::set(const Word& sigma, cx value) {
  if (sigma.alphabet() != alphabet_ || sigma.length() > 2 * max_len_)
    throw invalid_input("HermitianMoments: word out of range");
  if (sigma.empty() && std::abs(value - cx(1.0, 0.0)) > 1e-12)
    throw invalid_input("HermitianMoments: functional must be unital");
  s_[sigma] = value;
}

Matrix HermitianMoments::gram(int level) const {
  if (level > max_len_) throw invalid_input("HermitianMoments: level beyond max_len");
  const std::vector<Word> words = enumerate_words(alphabet_, level);
  const int n = static_cast<int>(words.size());
  Matrix g(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g(a, b) = at(involution(words[static_cast<size_t>(a)]) * words[static_cast<size_t>(b)]);
  return g;
}

cx nc_inner(const NCPoly& p, const NCPoly& q, const HermitianMoments& m) {
  cx acc(0.0, 0.0);
  for (const auto& [alpha, qa] : q.coeffs())
    for (const auto& [beta, pb] : p.coeffs())
      acc += std::conj(qa) * pb * m.at(involution(alpha) * beta);
  return acc;
}

JacobiFamily::JacobiFamily(int alphabet, int depth) : alphabet_(alphabet), depth_(depth) {
  if (alphabet < 1 || depth < 0) throw invalid_input("JacobiFamily: bad sizes");
  a_.resize(static_cast<size_t>(depth) * alphabet);
  b_.resize(static_cast<size_t>(depth) * alphabet);
  for (int n = 0; n < depth; ++n)
    for (int k = 1; k <= alphabet; ++k) {
      a_[idx(n, k)] = Matrix::Zero(level_size(alphabet, n), level_size(alphabet, n));
      b_[idx(n, k)] = Matrix::Zero(level_size(alphabet, n + 1), level_size(alphabet, n));
    }
}

size_t JacobiFamily::idx(int n, int k) const {
  if (n < 0 || n >= depth_ || k < 1 || k > alphabet_)
    throw invalid_input("JacobiFamily: block index out of range");
  return static_cast<size_t>(n) * alphabet_ + static_cast<size_t>(k - 1);
}

void JacobiFamily::set_A(int n, int k, Matrix m) {
  const auto sz = level_size(alphabet_, n);
  if (m.rows() != sz || m.cols() != sz) throw invalid_input("JacobiFamily: A block size");
  a_[idx(n, k)] = std::move(m);
}

void JacobiFamily::set_B(int n, int k, Matrix m) {
  if (m.rows() != level_size(alphabet_, n + 1) || m.cols() != level_size(alphabet_, n))
    throw invalid_input("JacobiFamily: B block size");
  b_[idx(n, k)] = std::move(m);
}

Matrix JacobiFamily::stacked_B(int n) const {
  const auto rows = level_size(alphabet_, n + 1);
  const auto cols = level_size(alphabet_, n);
  Matrix out(rows, rows);
  for (int k = 1; k <= alphabet_; ++k)
    out.block(0, (k - 1) * cols, rows, cols) = B(n, k);
  return out;
}

void JacobiFamily::validate(double tolerance) const {
  for (int n = 0; n < depth_; ++n) {
    for (int k = 1; k <= alphabet_; ++k) {
      const Matrix& a = A(n, k);
      if ((a - a.adjoint()).cwiseAbs().maxCoeff() > tolerance)
        throw invalid_input("JacobiFamily: A block is not selfadjoint");
    }
    const Matrix b = stacked_B(n);
    for (Eigen::Index r = 0; r < b.rows(); ++r) {
      for (Eigen::Index c = 0; c < r; ++c)
        if (std::abs(b(r, c)) > tolerance)
          throw invalid_input("JacobiFamily: stacked B is not upper triangular");
      const cx diag = b(r, r);
      if (!(diag.real() > 1e-10) || std::abs(diag.imag()) > tolerance)
        throw invalid_input("JacobiFamily: stacked B diagonal must be positive");
    }
  }
}

std::vector<NCPoly> gram_schmidt_nc(const HermitianMoments& m, int level) {
  const std::vector<Word> words = enumerate_words(m.alphabet(), level);
  const int n = static_cast<int>(words.size());
  Eigen::LLT<Matrix> llt(m.gram(level));
  if (llt.info() != Eigen::Success)
    throw invalid_input("gram_schmidt_nc: Gram matrix is not strictly positive definite");
  Matrix c = llt.matrixL().adjoint().solve(Matrix::Identity(n, n));
  std::vector<NCPoly> out;
  out.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    NCPoly phi(m.alphabet());
    for (int i = 0; i <= j; ++i)
      if (c(i, j) != cx(0.0, 0.0)) phi.add(words[static_cast<size_t>(i)], c(i, j));
    out.push_back(std::move(phi));
  }
  return out;
}

JacobiFamily extract_jacobi(const std::vector<NCPoly>& phis, const HermitianMoments& m) {
  const int alphabet = m.alphabet();
  // Family depth from the covered levels: phis spans all words up to it.
  int level = 0;
  while (word_count(alphabet, level + 1) <= static_cast<std::int64_t>(phis.size()))
    ++level;
  if (word_count(alphabet, level) != static_cast<std::int64_t>(phis.size()))
    throw invalid_input("extract_jacobi: family does not cover whole levels");
  const int depth = level;
  JacobiFamily out(alphabet, depth);
  auto phi_at = [&](const Word& w) -> const NCPoly& {
    return phis[static_cast<size_t>(w.rank())];
  };
  const std::vector<Word> words = enumerate_words(alphabet, depth);
  for (int n = 0; n < depth; ++n) {
    const std::int64_t base_n = word_count(alphabet, n - 1);
    const std::int64_t size_n = level_size(alphabet, n);
    const std::int64_t size_n1 = level_size(alphabet, n + 1);
    for (int k = 1; k <= alphabet; ++k) {
      Matrix a(size_n, size_n), b(size_n1, size_n);
      for (std::int64_t beta = 0; beta < size_n; ++beta) {
        const NCPoly x_phi =
            mul_generator_left(k, phi_at(words[static_cast<size_t>(base_n + beta)]));
        for (std::int64_t alpha = 0; alpha < size_n; ++alpha)
          a(alpha, beta) =
              nc_inner(x_phi, phi_at(words[static_cast<size_t>(base_n + alpha)]), m);
        const std::int64_t base_n1 = word_count(alphabet, n);
        for (std::int64_t alpha = 0; alpha < size_n1; ++alpha)
          b(alpha, beta) =
              nc_inner(x_phi, phi_at(words[static_cast<size_t>(base_n1 + alpha)]), m);
      }
      out.set_A(n, k, std::move(a));
      out.set_B(n, k, std::move(b));
    }
  }
  // Consistency gate: the three-term relation must hold in the functional
  // norm, otherwise the family and the moments do not belong together.
  for (int n = 0; n < depth; ++n) {
    const std::int64_t base_n = word_count(alphabet, n - 1);
    const std::int64_t size_n = level_size(alphabet, n);
    const std::int64_t base_n1 = word_count(alphabet, n);
    const std::int64_t size_n1 = level_size(alphabet, n + 1);
    for (int k = 1; k <= alphabet; ++k) {
      for (std::int64_t col = 0; col < size_n; ++col) {
        NCPoly residual =
            mul_generator_left(k, phi_at(words[static_cast<size_t>(base_n + col)]));
        for (std::int64_t row = 0; row < size_n; ++row)
          residual -= out.A(n, k)(row, col) * phi_at(words[static_cast<size_t>(base_n + row)]);
        for (std::int64_t row = 0; row < size_n1; ++row)
          residual -=
              out.B(n, k)(row, col) * phi_at(words[static_cast<size_t>(base_n1 + row)]);
        if (n >= 1) {
          const std::int64_t base_p = word_count(alphabet, n - 2);
          const Matrix bstar = out.B(n - 1, k).adjoint();
          for (std::int64_t row = 0; row < bstar.rows(); ++row)
            residual -= bstar(row, col) * phi_at(words[static_cast<size_t>(base_p + row)]);
        }
        const double norm2 = std::abs(nc_inner(residual, residual, m));
        if (norm2 > 1e-18)
          throw numeric_failure("extract_jacobi: three-term residual " +
                                std::to_string(std::sqrt(norm2)) +
                                " exceeds tolerance; inputs are inconsistent");
      }
    }
  }
  return out;
}

std::vector<NCPoly> favard_reconstruct(const JacobiFamily& j) {
  j.validate();
  const int alphabet = j.alphabet();
  const int depth = j.depth();
  std::vector<NCPoly> out;
  out.emplace_back(alphabet, Word(alphabet), cx(1.0, 0.0));
  std::vector<NCPoly> level_prev;  // P_{n-1}
  std::vector<NCPoly> level_cur;   // P_n
  level_cur.push_back(out[0]);
  for (int n = 0; n < depth; ++n) {
    const std::int64_t size_n = level_size(alphabet, n);
    const std::int64_t size_n1 = level_size(alphabet, n + 1);
    // Stacked residual row [X_k P_n - P_n A_{n,k} - P_{n-1} B*_{n-1,k}]_k.
    std::vector<NCPoly> stacked(static_cast<size_t>(alphabet) * size_n,
                                NCPoly(alphabet));
    for (int k = 1; k <= alphabet; ++k) {
      for (std::int64_t col = 0; col < size_n; ++col) {
        NCPoly r = mul_generator_left(k, level_cur[static_cast<size_t>(col)]);
        const Matrix& a = j.A(n, k);
        for (std::int64_t row = 0; row < size_n; ++row)
          r -= a(row, col) * level_cur[static_cast<size_t>(row)];
        if (n >= 1) {
          const Matrix bstar = j.B(n - 1, k).adjoint();
          for (std::int64_t row = 0; row < static_cast<std::int64_t>(level_prev.size());
               ++row)
            r -= bstar(row, col) * level_prev[static_cast<size_t>(row)];
        }
        stacked[static_cast<size_t>((k - 1) * size_n + col)] = std::move(r);
      }
    }
    // P_{n+1} = stacked row times B_n^{-1}.
    const Matrix binv = j.stacked_B(n).inverse();
    std::vector<NCPoly> next(static_cast<size_t>(size_n1), NCPoly(alphabet));
    for (std::int64_t colnew = 0; colnew < size_n1; ++colnew) {
      NCPoly acc(alphabet);
      for (std::int64_t c = 0; c < size_n1; ++c) {
        const cx w = binv(c, colnew);
        if (w != cx(0.0, 0.0)) acc += w * stacked[static_cast<size_t>(c)];
      }
      next[static_cast<size_t>(colnew)] = std::move(acc);
    }
    for (const NCPoly& p : next) out.push_back(p);
    level_prev = std::move(level_cur);
    level_cur = std::move(next);
  }
  return out;
}

Matrix jacobi_matrix(const JacobiFamily& j, int k, int max_level) {
  if (max_level < 0) throw invalid_input("jacobi_matrix: negative level");
  const int alphabet = j.alphabet();
  const std::int64_t size = word_count(alphabet, max_level);
  Matrix out = Matrix::Zero(size, size);
  for (int n = 0; n <= max_level; ++n) {
    const std::int64_t base = word_count(alphabet, n - 1);
    const std::int64_t len = level_size(alphabet, n);
    if (n < j.depth()) {
      out.block(base, base, len, len) = j.A(n, k);
      if (n + 1 <= max_level) {
        const std::int64_t base1 = word_count(alphabet, n);
        const std::int64_t len1 = level_size(alphabet, n + 1);
        out.block(base1, base, len1, len) = j.B(n, k);
        out.block(base, base1, len, len1) = j.B(n, k).adjoint();
      }
    }
  }
  return out;
}

cx gns_moments(const JacobiFamily& j, const Word& sigma) {
  const int level = sigma.length();
  if (level == 0) return cx(1.0, 0.0);
  std::vector<Matrix> jk;
  for (int k = 1; k <= j.alphabet(); ++k) jk.push_back(jacobi_matrix(j, k, level));
  Vector v = Vector::Zero(jk[0].rows());
  v(0) = cx(1.0, 0.0);
  for (int t = level - 1; t >= 0; --t) v = jk[static_cast<size_t>(sigma.letter(t) - 1)] * v;
  return v(0);
}

HermitianMoments moments_from_jacobi(const JacobiFamily& j, int max_len) {
  HermitianMoments m(j.alphabet(), max_len);
  const std::vector<Word> words = enumerate_words(j.alphabet(), 2 * max_len);
  std::vector<cx> values(words.size());
  parallel_for(static_cast<std::ptrdiff_t>(words.size()), [&](std::ptrdiff_t i) {
    values[static_cast<size_t>(i)] = gns_moments(j, words[static_cast<size_t>(i)]);
  });
  for (size_t i = 0; i < words.size(); ++i) m.set(words[i], values[i]);
  return m;
}

namespace ref {
HermitianMoments moments_from_jacobi(const JacobiFamily& j, int max_len) {
  HermitianMoments m(j.alphabet(), max_len);
  for (const Word& w : enumerate_words(j.alphabet(), 2 * max_len))
    m.set(w, gns_moments(j, w));
  return m;
}
}  // namespace ref

FavardReport favard_roundtrip(const JacobiFamily& j) {
  j.validate();
  const int depth = j.depth();
  const HermitianMoments m = moments_from_jacobi(j, depth);
  const std::vector<NCPoly> phis = gram_schmidt_nc(m, depth);
  const JacobiFamily extracted = extract_jacobi(phis, m);
  double block_err = 0.0;
  for (int n = 0; n < depth; ++n)
    for (int k = 1; k <= j.alphabet(); ++k) {
      block_err = std::max(block_err,
                           (extracted.A(n, k) - j.A(n, k)).cwiseAbs().maxCoeff());
      block_err = std::max(block_err,
                           (extracted.B(n, k) - j.B(n, k)).cwiseAbs().maxCoeff());
    }
  const std::vector<NCPoly> rebuilt = favard_reconstruct(j);
  double coeff_err = 0.0;
  for (size_t i = 0; i < phis.size(); ++i)
    coeff_err = std::max(coeff_err, NCPoly::distance(phis[i], rebuilt[i]));
  return {block_err, coeff_err};
}

}  // namespace ncortho
