#ifndef NCORTHO_CLASSICAL_CASES_HPP
#define NCORTHO_CLASSICAL_CASES_HPP

#include <vector>

#include "ncortho/ortho_one_var.hpp"
#include "ncortho/schur_params.hpp"

namespace ncortho {

// Verblunsky-type coefficients of a Toeplitz kernel; gamma(n) for n >= 1.
class SzegoCoeffs {
public:
  explicit SzegoCoeffs(std::vector<cx> gamma);
  int count() const { return static_cast<int>(gamma_.size()); }
  cx gamma(int n) const;  // 1-based
  double d(int n) const { return defect(gamma(n)); }

private:
  std::vector<cx> gamma_;
};

struct ThreeTermCoeffs {
  std::vector<double> a;  // diagonal recurrence coefficients
  std::vector<double> b;  // positive off-diagonal coefficients
};

struct GegenbauerSpec {
  double lambda;  // weight exponent parameter, > -1/2
  int l;          // shift of the kernel / power of x^2 in the weight
  int n;          // polynomial degree
};

struct GegenbauerClosedForm {
  double h;            // squared norm of the auxiliary polynomial C_n
  double k_lead;       // leading coefficient of the orthonormal polynomial
  double phi_at_zero;  // value of the orthonormal polynomial at 0
};

// Constant-diagonal parameters with gamma_{k,k+n} = gamma_n.
GammaParams1D toeplitz_lift(const SzegoCoeffs& c, int horizon);

// Classical Szego recursion; returns phi and phi# coefficient sequences.
std::pair<std::vector<Vector>, std::vector<Vector>> szego_recursion(const SzegoCoeffs& c,
                                                                    int n_max);

// True when the kernel depends on index sum only.
bool hankel_check(const MomentKernel1D& kernel, double tolerance = 1e-12);

// Three-term coefficients a_n = <x phi_n, phi_n>, b_n = <x phi_n, phi_{n+1}>
// of a Hankel kernel, n = 0..horizon-1.
ThreeTermCoeffs three_term_from_moments(const MomentKernel1D& kernel);

// Orthonormal family rebuilt from three-term data; phi_0 = s_00^{-1/2}.
std::vector<Vector> three_term_reconstruct(const ThreeTermCoeffs& coeffs, double s00,
                                           int n_max);

// Pochhammer symbol (x)_n and the beta function, via log-gamma for positive
// arguments.
double pochhammer(double x, int n);
double beta_function(double a, double b);

GegenbauerClosedForm gegenbauer_closed(const GegenbauerSpec& spec);

// Parameter gamma_{l, l+n} of the Gegenbauer weight; zero for odd offsets.
double gegenbauer_gamma(double lambda, int l, int n);

// Moments s_{k,j} = int x^{k+j+2l} w(x) dx of the Gegenbauer weight for
// k, j <= horizon, by Gauss-Legendre quadrature after x = sin(theta).
// Independent monomial integrals run in parallel.
MomentKernel1D weight_moments_quadrature(double lambda, int l, int horizon);

namespace ref {
// Serial reference, kept for tests and benchmarks.
MomentKernel1D weight_moments_quadrature(double lambda, int l, int horizon);
}  // namespace ref

// One plain weighted integral int f(x) w_lambda(x) dx, exposed for tests.
double gegenbauer_weight_integral(double lambda, int monomial_power);

}  // namespace ncortho

#endif
