#include "ncortho/schur_params.hpp"

#include <algorithm>
#include <sstream>

#include "ncortho/parallel.hpp"

namespace ncortho {

GammaParams1D::GammaParams1D(int horizon) : horizon_(horizon) {
  if (horizon < 0) throw invalid_input("GammaParams1D: horizon must be >= 0");
  diag_.assign(static_cast<size_t>(horizon) + 1, 1.0);
  gamma_.assign(static_cast<size_t>(horizon) * (horizon + 1) / 2, cx(0.0, 0.0));
}

GammaParams1D::GammaParams1D(std::vector<double> diag,
                             const std::vector<std::vector<cx>>& gamma)
    : GammaParams1D(static_cast<int>(diag.size()) - 1) {
  for (int k = 0; k <= horizon_; ++k) set_diag(k, diag[static_cast<size_t>(k)]);
  for (int k = 0; k < horizon_; ++k)
    for (int j = k + 1; j <= horizon_; ++j)
      set_gamma(k, j, gamma[static_cast<size_t>(k)][static_cast<size_t>(j - k - 1)]);
}

size_t GammaParams1D::pair_index(int k, int j) const {
  if (k < 0 || j <= k || j > horizon_)
    throw invalid_input("GammaParams1D: pair (" + std::to_string(k) + "," +
                        std::to_string(j) + ") out of range");
  // Pairs packed by row k: row k holds horizon - k entries.
  size_t row_start = static_cast<size_t>(k) * horizon_ - static_cast<size_t>(k) * (k - 1) / 2;
  return row_start + static_cast<size_t>(j - k - 1);
}

void GammaParams1D::set_diag(int k, double value) {
  if (k < 0 || k > horizon_) throw invalid_input("GammaParams1D: diag index out of range");
  if (!(value > 0.0)) throw invalid_input("GammaParams1D: diagonal must be positive");
  diag_[static_cast<size_t>(k)] = value;
}

void GammaParams1D::set_gamma(int k, int j, cx value) {
  require_strict_contraction(value, "GammaParams1D");
  gamma_[pair_index(k, j)] = value;
}

MomentKernel1D::MomentKernel1D(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw invalid_input("MomentKernel1D: entries must be square and nonempty");
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw invalid_input("MomentKernel1D: matrix is not hermitian");
}

TriangularArray::TriangularArray(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw invalid_input("TriangularArray: entries must be square and nonempty");
  for (Eigen::Index k = 0; k < entries_.rows(); ++k)
    for (Eigen::Index j = k + 1; j < entries_.cols(); ++j)
      if (std::abs(entries_(k, j)) != 0.0)
        throw invalid_input("TriangularArray: upper part must vanish");
}

Matrix julia(const cx& gamma) {
  require_strict_contraction(gamma, "julia");
  Matrix J(2, 2);
  const double d = defect(gamma);
  J << gamma, d, d, -std::conj(gamma);
  return J;
}

namespace {

// In-place action of the embedded factor J(gamma_{k,m}) on coordinates
// (m-k-1, m-k) of a working vector.
inline void apply_julia_step(Vector& v, const cx& gamma, int at) {
  const double d = defect(gamma);
  const cx a = v(at), b = v(at + 1);
  v(at) = gamma * a + d * b;
  v(at + 1) = d * a - std::conj(gamma) * b;
}

// First column of U_{k,j} for every k = j-1..0 at fixed j; writes the scaled
// moments into column j of `out`.
void forward_column(const GammaParams1D& p, int j, Matrix& out) {
  out(j, j) = p.diag(j);
  Vector v = Vector::Zero(1);
  v(0) = cx(1.0, 0.0);
  for (int k = j - 1; k >= 0; --k) {
    Vector next = Vector::Zero(j - k + 1);
    next.head(j - k) = v;
    // Factors of U_{k,j} applied right to left; the rightmost embedded
    // operator touches the deepest pair of coordinates.
    for (int m = j; m >= k + 1; --m) apply_julia_step(next, p.gamma(k, m), m - k - 1);
    v = std::move(next);
    out(k, j) = std::sqrt(p.diag(k)) * std::sqrt(p.diag(j)) * v(0);
  }
}

Matrix forward_matrix_serial(const GammaParams1D& p) {
  const int n = p.horizon() + 1;
  Matrix s(n, n);
  for (int j = 0; j < n; ++j) forward_column(p, j, s);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) s(k, j) = std::conj(s(j, k));
  return s;
}

}  // namespace

MomentKernel1D moments_from_params(const GammaParams1D& p) {
  const int n = p.horizon() + 1;
  Matrix s(n, n);
  parallel_for(n, [&](std::ptrdiff_t j) { forward_column(p, static_cast<int>(j), s); });
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) s(k, j) = std::conj(s(j, k));
  return MomentKernel1D(std::move(s));
}

namespace ref {
MomentKernel1D moments_from_params(const GammaParams1D& p) {
  return MomentKernel1D(forward_matrix_serial(p));
}
}  // namespace ref

Matrix unitary_product(const GammaParams1D& p, int k, int j) {
  if (k < 0 || j < k || j > p.horizon()) throw invalid_input("unitary_product: bad pair");
  const int size = j - k + 1;
  Matrix u = Matrix::Identity(1, 1);
  for (int kk = j - 1; kk >= k; --kk) {
    const int sz = j - kk + 1;
    Matrix padded = Matrix::Zero(sz, sz);
    padded.topLeftCorner(sz - 1, sz - 1) = u;
    padded(sz - 1, sz - 1) = cx(1.0, 0.0);
    Matrix left = Matrix::Identity(sz, sz);
    for (int m = kk + 1; m <= j; ++m) {
      Matrix factor = Matrix::Identity(sz, sz);
      factor.block(m - kk - 1, m - kk - 1, 2, 2) = julia(p.gamma(kk, m));
      left = left * factor;
    }
    u = left * padded;
  }
  if (u.rows() != size) throw numeric_failure("unitary_product: size mismatch");
  return u;
}

namespace {

// Value of the scaled moment <U_{k,j} e1, e1> with the top parameter
// gamma_{k,j} replaced by zero; everything below offset j-k enters as is.
cx forward_entry_with_top_zeroed(const GammaParams1D& p, int k, int j) {
  Vector v = Vector::Zero(1);
  v(0) = cx(1.0, 0.0);
  for (int kk = j - 1; kk >= k; --kk) {
    Vector next = Vector::Zero(j - kk + 1);
    next.head(j - kk) = v;
    for (int m = j; m >= kk + 1; --m) {
      const cx g = (kk == k && m == j) ? cx(0.0, 0.0) : p.gamma(kk, m);
      apply_julia_step(next, g, m - kk - 1);
    }
    v = std::move(next);
  }
  return v(0);
}

}  // namespace

GammaParams1D params_from_moments(const MomentKernel1D& kernel) {
  const int h = kernel.horizon();
  GammaParams1D p(h);
  for (int k = 0; k <= h; ++k) {
    const cx skk = kernel(k, k);
    if (!(skk.real() > 0.0))
      throw invalid_input("params_from_moments: diagonal entry " + std::to_string(k) +
                          " is not positive");
    p.set_diag(k, skk.real());
  }
  for (int offset = 1; offset <= h; ++offset) {
    for (int k = 0; k + offset <= h; ++k) {
      const int j = k + offset;
      // s_{k,j} = sqrt(s_kk s_jj) (A + gamma_{k,j} prod_{k<m<j} d_{k,m} d_{m,j})
      // where A collects the paths avoiding the top box.
      double denom = std::sqrt(p.diag(k)) * std::sqrt(p.diag(j));
      for (int m = k + 1; m < j; ++m) denom *= p.d(k, m) * p.d(m, j);
      if (!(denom > 1e-280))
        throw numeric_failure("params_from_moments: denominator underflow at (" +
                              std::to_string(k) + "," + std::to_string(j) +
                              "); kernel is nearly degenerate");
      const cx base = forward_entry_with_top_zeroed(p, k, j) *
                      std::sqrt(p.diag(k)) * std::sqrt(p.diag(j));
      const cx gamma = (kernel(k, j) - base) / denom;
      if (!(std::norm(gamma) < 1.0 - tol::gamma_margin))
        throw invalid_input("params_from_moments: |gamma_{" + std::to_string(k) + "," +
                            std::to_string(j) +
                            "}| >= 1; kernel is not strictly positive definite");
      p.set_gamma(k, j, gamma);
    }
  }
  return p;
}

double det_principal(const GammaParams1D& p, int l, int m) {
  if (l < 0 || m < l || m > p.horizon()) throw invalid_input("det_principal: bad range");
  double det = 1.0;
  for (int k = l; k <= m; ++k) det *= p.diag(k);
  for (int j = l; j < m; ++j)
    for (int q = j + 1; q <= m; ++q) {
      const double d = p.d(j, q);
      det *= d * d;
    }
  return det;
}

double fisher_hadamard(const GammaParams1D& p, int l, int n, int n_prime, int m) {
  if (!(l <= n && n <= n_prime && n_prime <= m))
    throw invalid_input("fisher_hadamard: need l <= n <= n' <= m");
  if (l < 0 || m > p.horizon()) throw invalid_input("fisher_hadamard: out of range");
  double prod = 1.0;
  for (int k = l; k < n; ++k)
    for (int j = n_prime + 1; j <= m; ++j) {
      const double d = p.d(k, j);
      prod *= d * d;
    }
  return prod;
}

cx LatticeMonomial::evaluate(const GammaParams1D& p) const {
  cx value(static_cast<double>(sign), 0.0);
  for (const Term& t : terms) {
    switch (t.factor) {
      case Factor::Gamma: value *= p.gamma(t.k, t.j); break;
      case Factor::GammaConj: value *= std::conj(p.gamma(t.k, t.j)); break;
      case Factor::D: value *= p.d(t.k, t.j); break;
    }
  }
  return value;
}

std::string LatticeMonomial::str() const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "+");
  for (const Term& t : terms) {
    switch (t.factor) {
      case Factor::Gamma: os << " g(" << t.k << "," << t.j << ")"; break;
      case Factor::GammaConj: os << " g*(" << t.k << "," << t.j << ")"; break;
      case Factor::D: os << " d(" << t.k << "," << t.j << ")"; break;
    }
  }
  return os.str();
}

namespace {

using SymbolicPoly = std::vector<LatticeMonomial>;

LatticeMonomial times(const LatticeMonomial& m, LatticeMonomial::Factor f, int k, int j,
                      int sign) {
  LatticeMonomial out = m;
  out.sign *= sign;
  LatticeMonomial::Term t{f, k, j};
  out.terms.insert(std::upper_bound(out.terms.begin(), out.terms.end(), t), t);
  return out;
}

SymbolicPoly scaled(const SymbolicPoly& poly, LatticeMonomial::Factor f, int k, int j,
                    int sign) {
  SymbolicPoly out;
  out.reserve(poly.size());
  for (const auto& m : poly) out.push_back(times(m, f, k, j, sign));
  return out;
}

void append(SymbolicPoly& dst, SymbolicPoly src) {
  std::move(src.begin(), src.end(), std::back_inserter(dst));
}

}  // namespace

std::vector<LatticeMonomial> lattice_expand(int offset) {
  if (offset < 1) throw invalid_input("lattice_expand: offset must be >= 1");
  using F = LatticeMonomial::Factor;
  // Symbolic run of the forward recursion for the pair (0, offset).
  std::vector<SymbolicPoly> v(1);
  v[0].push_back(LatticeMonomial{});
  const int j = offset;
  for (int k = j - 1; k >= 0; --k) {
    std::vector<SymbolicPoly> next(static_cast<size_t>(j - k + 1));
    for (int i = 0; i < j - k; ++i) next[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
    for (int m = j; m >= k + 1; --m) {
      const int at = m - k - 1;
      SymbolicPoly a = std::move(next[static_cast<size_t>(at)]);
      SymbolicPoly b = std::move(next[static_cast<size_t>(at) + 1]);
      SymbolicPoly top, bottom;
      append(top, scaled(a, F::Gamma, k, m, 1));
      append(top, scaled(b, F::D, k, m, 1));
      append(bottom, scaled(a, F::D, k, m, 1));
      append(bottom, scaled(b, F::GammaConj, k, m, -1));
      next[static_cast<size_t>(at)] = std::move(top);
      next[static_cast<size_t>(at) + 1] = std::move(bottom);
    }
    v = std::move(next);
  }
  SymbolicPoly result = std::move(v[0]);
  std::sort(result.begin(), result.end());
  return result;
}

std::int64_t catalan_count(int offset) {
  if (offset < 0) throw invalid_input("catalan_count: negative offset");
  // C_l = binom(2l, l) / (l + 1) built incrementally to stay in integers.
  std::int64_t c = 1;
  for (int i = 0; i < offset; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

// Cholesky with nonnegative diagonal; tolerates semidefinite input.
Matrix lower_cholesky(const Matrix& k) {
  const Eigen::Index n = k.rows();
  Matrix L = Matrix::Zero(n, n);
  const double scale = std::max(1.0, k.cwiseAbs().maxCoeff());
  for (Eigen::Index j = 0; j < n; ++j) {
    cx diag = k(j, j);
    for (Eigen::Index m = 0; m < j; ++m) diag -= L(j, m) * std::conj(L(j, m));
    const double dj = diag.real();
    if (dj < -1e-10 * scale)
      throw invalid_input("spectral_factor: kernel is not positive semidefinite");
    const double root = dj > 0.0 ? std::sqrt(dj) : 0.0;
    L(j, j) = root;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      cx v = k(i, j);
      for (Eigen::Index m = 0; m < j; ++m) v -= L(i, m) * std::conj(L(j, m));
      L(i, j) = root > 1e-14 * scale ? v / root : cx(0.0, 0.0);
    }
  }
  return L;
}

}  // namespace

TriangularArray spectral_factor(const MomentKernel1D& kernel) {
  return TriangularArray(lower_cholesky(kernel.matrix()));
}

TriangularArray outer_factor(const MomentKernel1D& kernel) {
  // Factor the index-reversed kernel and flip back: the 180-degree rotation
  // of its lower Cholesky factor is upper triangular, and its adjoint is the
  // lower array with K = T* T and column j supported on rows >= j.
  Matrix flipped = kernel.matrix().reverse();
  Matrix L = lower_cholesky(flipped);
  Matrix out = L.reverse().adjoint();
  return TriangularArray(std::move(out));
}

double szego_class_margin(const GammaParams1D& p) {
  double margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= p.horizon(); ++k) {
    double value = std::sqrt(p.diag(k));
    for (int n = k + 1; n <= p.horizon(); ++n) value *= p.d(k, n);
    margin = std::min(margin, value);
  }
  return margin;
}

}  // namespace ncortho
