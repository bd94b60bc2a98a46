#include "ncortho/ortho_one_var.hpp"

#include <cmath>

namespace ncortho {

namespace {

Vector shift_up(const Vector& v) {
  Vector out = Vector::Zero(v.size() + 1);
  out.tail(v.size()) = v;
  return out;
}

}  // namespace

PolyFamily1D ortho_recurrence(const GammaParams1D& p, int n_max, int l_max) {
  if (n_max + l_max > p.horizon())
    throw invalid_input("ortho_recurrence: horizon insufficient for requested table");
  PolyFamily1D fam(n_max, l_max);
  const int total = fam.total();
  for (int l = 0; l <= total; ++l) {
    Vector c(1);
    c(0) = cx(1.0 / std::sqrt(p.diag(l)), 0.0);
    fam.set_phi(0, l, c);
    fam.set_phisharp(0, l, c);
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l + n <= total; ++l) {
      const cx g = p.gamma(l, n + l);
      const double d = p.d(l, n + l);
      const Vector x_phi = shift_up(fam.phi(n - 1, l + 1));
      Vector sharp_prev = Vector::Zero(n + 1);
      sharp_prev.head(n) = fam.phisharp(n - 1, l);
      fam.set_phi(n, l, (x_phi - g * sharp_prev) / d);
      fam.set_phisharp(n, l, (-std::conj(g) * x_phi + sharp_prev) / d);
    }
  }
  return fam;
}

PolyFamily1D ortho_gram_schmidt(const MomentKernel1D& kernel) {
  const int h = kernel.horizon();
  // Orthonormalizes the monomials for every shifted kernel K^l. The
  // coefficient matrix C = L^{-*} of the Cholesky factor of the (l..h) block
  // satisfies C* K^l C = I with C upper triangular, positive diagonal.
  PolyFamily1D fam(h, 0);
  for (int l = 0; l <= h; ++l) {
    const int size = h - l + 1;
    Eigen::LLT<Matrix> llt(kernel.matrix().block(l, l, size, size));
    if (llt.info() != Eigen::Success)
      throw invalid_input("ortho_gram_schmidt: kernel is not strictly positive definite");
    Matrix c = llt.matrixL().adjoint().solve(Matrix::Identity(size, size));
    for (int n = 0; n < size; ++n) fam.set_phi(n, l, c.col(n).head(n + 1));
  }
  return fam;
}

Vector ortho_determinant(const MomentKernel1D& kernel, int n) {
  if (n < 0 || n > kernel.horizon()) throw invalid_input("ortho_determinant: bad degree");
  const Matrix& s = kernel.matrix();
  auto principal = [&](int m) -> double {
    if (m < 0) return 1.0;
    const cx det = s.topLeftCorner(m + 1, m + 1).determinant();
    if (!(det.real() > 0.0))
      throw invalid_input("ortho_determinant: nonpositive principal minor");
    return det.real();
  };
  const double dn1 = principal(n - 1);
  const double dn = principal(n);
  Vector coeffs = Vector::Zero(n + 1);
  const double scale = 1.0 / std::sqrt(dn1 * dn);
  for (int beta = 0; beta <= n; ++beta) {
    // Minor of the bordered matrix with the bottom symbol row and column
    // beta removed.
    Matrix minor(n, n);
    int col = 0;
    for (int b = 0; b <= n; ++b) {
      if (b == beta) continue;
      minor.col(col++) = s.col(b).head(n);
    }
    const cx det = n == 0 ? cx(1.0, 0.0) : minor.determinant();
    const double sign = ((n + beta) % 2 == 0) ? 1.0 : -1.0;
    coeffs(beta) = sign * scale * det;
  }
  return coeffs;
}

GammaParams1D gamma_from_polys(const PolyFamily1D& fam) {
  const int total = fam.total();
  GammaParams1D p(total);
  for (int l = 0; l <= total; ++l) {
    const double lead0 = fam.leading(0, l);
    if (!(lead0 > 0.0)) throw invalid_input("gamma_from_polys: corrupted family");
    p.set_diag(l, 1.0 / (lead0 * lead0));
  }
  for (int l = 0; l <= total; ++l) {
    for (int n = 1; n <= fam.n_max() && l + n <= total; ++n) {
      // gamma_{l, n+l} = -phi_n(0, l) k^{l+1}_0 ... k^{l+1}_{n-1} / (k^l_0 ... k^l_n)
      double quotient = 1.0;
      for (int q = 0; q < n; ++q) quotient *= fam.leading(q, l + 1);
      for (int q = 0; q <= n; ++q) {
        const double k = fam.leading(q, l);
        if (!(k > 0.0)) throw invalid_input("gamma_from_polys: zero leading coefficient");
        quotient /= k;
      }
      p.set_gamma(l, n + l, -fam.phi_at_zero(n, l) * quotient);
    }
  }
  return p;
}

GammaParams1D gamma_from_polys(const PolyFamily1D& fam, const MomentKernel1D& kernel) {
  const int total = fam.total();
  if (kernel.horizon() < total)
    throw invalid_input("gamma_from_polys: kernel horizon below family range");
  const Matrix& s = kernel.matrix();
  auto block_det = [&](int l, int m) -> double {
    const cx det = s.block(l, l, m - l + 1, m - l + 1).determinant();
    if (!(det.real() > 0.0))
      throw invalid_input("gamma_from_polys: nonpositive principal minor");
    return det.real();
  };
  GammaParams1D p(total);
  for (int l = 0; l <= total; ++l) p.set_diag(l, s(l, l).real());
  for (int l = 0; l <= total; ++l) {
    for (int n = 1; n <= fam.n_max() && l + n <= total; ++n) {
      const double ratio = std::sqrt(block_det(l, l + n) / block_det(l + 1, l + n));
      p.set_gamma(l, n + l, -fam.phi_at_zero(n, l) * ratio);
    }
  }
  return p;
}

std::pair<EmbeddedArray, EmbeddedArray> toeplitz_embed(const PolyFamily1D& fam, int n) {
  if (n < 0 || n > fam.n_max()) throw invalid_input("toeplitz_embed: bad index");
  const int size = fam.total() - n + 1;
  EmbeddedArray phi{Matrix::Zero(size, size)};
  EmbeddedArray sharp{Matrix::Zero(size, size)};
  for (int j = 0; j < size; ++j) {
    const Vector& a = fam.phi(n, j);
    const Vector& b = fam.phisharp(n, j);
    for (int k = j; k < size && k - j <= n; ++k) {
      phi.entries(k, j) = a(k - j);
      sharp.entries(k, j) = b(k - j);
    }
  }
  return {std::move(phi), std::move(sharp)};
}

EmbeddedArray invert_embedded(const EmbeddedArray& arr) {
  const int size = arr.size();
  const Matrix& m = arr.entries;
  for (int i = 0; i < size; ++i)
    if (std::abs(m(i, i)) < 1e-300)
      throw numeric_failure("invert_embedded: zero diagonal entry");
  EmbeddedArray inv{Matrix::Zero(size, size)};
  for (int j = 0; j < size; ++j) {
    inv.entries(j, j) = cx(1.0, 0.0) / m(j, j);
    for (int i = j + 1; i < size; ++i) {
      cx acc(0.0, 0.0);
      for (int k = j; k < i; ++k) acc += m(i, k) * inv.entries(k, j);
      inv.entries(i, j) = -acc / m(i, i);
    }
  }
  return inv;
}

std::vector<ConvergenceRow> convergence_report(const GammaParams1D& p, int n_max,
                                               int window) {
  if (window < 1) throw invalid_input("convergence_report: window must be >= 1");
  if (n_max + window - 1 > p.horizon())
    throw invalid_input("convergence_report: horizon too small for window");
  if (!(szego_class_margin(p) > 0.0))
    throw invalid_input("convergence_report: parameters outside the Szego class");
  const PolyFamily1D fam = ortho_recurrence(p, n_max, p.horizon() - n_max);
  const Matrix theta = outer_factor(moments_from_params(p)).matrix();
  std::vector<ConvergenceRow> rows;
  rows.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto [phi, sharp] = toeplitz_embed(fam, n);
    const EmbeddedArray inv = invert_embedded(sharp);
    const double dev_phi = phi.entries.topLeftCorner(window, window).cwiseAbs().maxCoeff();
    const double dev_theta = (inv.entries.topLeftCorner(window, window) -
                              theta.topLeftCorner(window, window))
                                 .cwiseAbs()
                                 .maxCoeff();
    rows.push_back({n, dev_phi, dev_theta});
  }
  return rows;
}

double szego_ratio(const MomentKernel1D& kernel, int r, int q) {
  if (!(0 <= r && r < q && q <= kernel.horizon()))
    throw invalid_input("szego_ratio: need 0 <= r < q <= horizon");
  const GammaParams1D p = params_from_moments(kernel);
  const double det_side = det_principal(p, r, q) / det_principal(p, r + 1, q);
  const PolyFamily1D fam = ortho_recurrence(p, q - r, r);
  const double poly_side = 1.0 / std::norm(fam.phisharp(q - r, r)(0));
  if (std::abs(det_side - poly_side) > 1e-9 * std::max(1.0, std::abs(det_side)))
    throw numeric_failure("szego_ratio: determinant and polynomial sides disagree");
  return det_side;
}

double szego_first_limit(const GammaParams1D& p, int r) {
  if (r < 0 || r > p.horizon()) throw invalid_input("szego_first_limit: index out of range");
  double g = p.diag(r);
  for (int j = r + 1; j <= p.horizon(); ++j) {
    const double d = p.d(r, j);
    g *= d * d;
  }
  return g;
}

StrongLimitReport szego_strong_limit(const GammaParams1D& p, int n) {
  if (n < 0 || n > p.horizon())
    throw invalid_input("szego_strong_limit: index out of range");
  double denom = 1.0;
  for (int l = 0; l <= n; ++l) denom *= szego_first_limit(p, l);
  const double ratio = det_principal(p, 0, n) / denom;
  double l_trunc = 1.0;
  for (int k = 0; k < n; ++k)
    for (int j = n + 1; j <= p.horizon(); ++j) {
      const double d = p.d(k, j);
      l_trunc *= d * d;
    }
  return {ratio, l_trunc};
}

}  // namespace ncortho
