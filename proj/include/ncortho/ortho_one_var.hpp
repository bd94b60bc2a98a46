#ifndef NCORTHO_ORTHO_ONE_VAR_HPP
#define NCORTHO_ORTHO_ONE_VAR_HPP

#include <vector>

#include "ncortho/schur_params.hpp"

namespace ncortho {

// Triangular table of the orthonormal polynomials phi_n(X, l) and their
// sharp companions for the shifted kernels K^l. Coefficients are stored in
// increasing powers of the variable. The table covers pairs with n <= n_max
// and n + l <= n_max + l_max; a slot may be absent (the Gram-Schmidt route
// produces no sharp polynomials).
class PolyFamily1D {
public:
  PolyFamily1D(int n_max, int l_max)
      : n_max_(n_max), l_max_(l_max),
        phi_(static_cast<size_t>(n_max) + 1), phisharp_(static_cast<size_t>(n_max) + 1) {
    if (n_max < 0 || l_max < 0) throw invalid_input("PolyFamily1D: negative bounds");
    for (int n = 0; n <= n_max; ++n) {
      phi_[static_cast<size_t>(n)].resize(static_cast<size_t>(total() - n) + 1);
      phisharp_[static_cast<size_t>(n)].resize(static_cast<size_t>(total() - n) + 1);
    }
  }

  int n_max() const { return n_max_; }
  int l_max() const { return l_max_; }
  // Total degree bound of the table; equals the horizon it was built from.
  int total() const { return n_max_ + l_max_; }
  bool in_range(int n, int l) const {
    return n >= 0 && l >= 0 && n <= n_max_ && n + l <= total();
  }
  bool has_phi(int n, int l) const { return in_range(n, l) && at(phi_, n, l).size() > 0; }
  bool has_phisharp(int n, int l) const {
    return in_range(n, l) && at(phisharp_, n, l).size() > 0;
  }

  const Vector& phi(int n, int l) const { return filled(phi_, n, l); }
  const Vector& phisharp(int n, int l) const { return filled(phisharp_, n, l); }
  void set_phi(int n, int l, Vector v) { check_range(n, l); at(phi_, n, l) = std::move(v); }
  void set_phisharp(int n, int l, Vector v) {
    check_range(n, l);
    at(phisharp_, n, l) = std::move(v);
  }

  cx phi_at_zero(int n, int l) const { return phi(n, l)(0); }
  // Leading coefficients are real and positive for valid families.
  double leading(int n, int l) const { return phi(n, l)(n).real(); }

private:
  using Table = std::vector<std::vector<Vector>>;
  static const Vector& at(const Table& t, int n, int l) {
    return t[static_cast<size_t>(n)][static_cast<size_t>(l)];
  }
  static Vector& at(Table& t, int n, int l) {
    return t[static_cast<size_t>(n)][static_cast<size_t>(l)];
  }
  void check_range(int n, int l) const {
    if (!in_range(n, l))
      throw invalid_input("PolyFamily1D: slot (" + std::to_string(n) + "," +
                          std::to_string(l) + ") out of range");
  }
  const Vector& filled(const Table& t, int n, int l) const {
    check_range(n, l);
    const Vector& v = at(t, n, l);
    if (v.size() == 0)
      throw invalid_input("PolyFamily1D: slot (" + std::to_string(n) + "," +
                          std::to_string(l) + ") not populated");
    return v;
  }

  int n_max_, l_max_;
  Table phi_, phisharp_;
};

// Lower triangular finite section of the Toeplitz embedding of one row of
// the polynomial table.
struct EmbeddedArray {
  Matrix entries;
  int size() const { return static_cast<int>(entries.rows()); }
};

// Szego-type recurrence over the (n, l) table.
PolyFamily1D ortho_recurrence(const GammaParams1D& p, int n_max, int l_max);

// Gram-Schmidt of the monomials under the kernel inner product; l = 0 slice.
PolyFamily1D ortho_gram_schmidt(const MomentKernel1D& kernel);

// Bordered-determinant coefficients of the degree-n orthonormal polynomial.
Vector ortho_determinant(const MomentKernel1D& kernel, int n);

// Parameter recovery via the leading-coefficient quotients.
GammaParams1D gamma_from_polys(const PolyFamily1D& fam);
// Parameter recovery via determinant ratios of the kernel (the alternate
// formula); both routes must agree for consistent inputs.
GammaParams1D gamma_from_polys(const PolyFamily1D& fam, const MomentKernel1D& kernel);

// Finite sections of the embeddings Phi_n, Phi#_n.
std::pair<EmbeddedArray, EmbeddedArray> toeplitz_embed(const PolyFamily1D& fam, int n);
// Lower triangular inverse on the finite section.
EmbeddedArray invert_embedded(const EmbeddedArray& arr);

struct ConvergenceRow {
  int n;
  double deviation_phi;    // max |Phi_n| over the window
  double deviation_theta;  // max |inv(Phi#_n) - outer factor| over the window
};
std::vector<ConvergenceRow> convergence_report(const GammaParams1D& p, int n_max,
                                               int window);

// Determinant ratio D_{r,q} / D_{r+1,q}; checks the identity with
// 1 / |phi#_{q-r}(0, r)|^2 and throws numeric_failure on disagreement.
double szego_ratio(const MomentKernel1D& kernel, int r, int q);

// Truncated first-limit product g_r = s_rr prod_{r<j<=horizon} d_{r,j}^2.
double szego_first_limit(const GammaParams1D& p, int r);

struct StrongLimitReport {
  double ratio;        // D_{0,n} / prod_{l<=n} g_l at the working horizon
  double l_truncated;  // prod over k < n < j <= horizon of d_{k,j}^2
};
StrongLimitReport szego_strong_limit(const GammaParams1D& p, int n);

}  // namespace ncortho

#endif
