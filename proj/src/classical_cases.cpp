#include "ncortho/classical_cases.hpp"

#include <cmath>

#include "ncortho/parallel.hpp"
#include "ncortho/quadrature.hpp"

namespace ncortho {

SzegoCoeffs::SzegoCoeffs(std::vector<cx> gamma) : gamma_(std::move(gamma)) {
  for (const cx& g : gamma_) require_strict_contraction(g, "SzegoCoeffs");
}

cx SzegoCoeffs::gamma(int n) const {
  if (n < 1 || n > count()) throw invalid_input("SzegoCoeffs: index out of range");
  return gamma_[static_cast<size_t>(n - 1)];
}

GammaParams1D toeplitz_lift(const SzegoCoeffs& c, int horizon) {
  if (horizon < 1) throw invalid_input("toeplitz_lift: horizon must be >= 1");
  if (c.count() < horizon)
    throw invalid_input("toeplitz_lift: need " + std::to_string(horizon) + " coefficients");
  GammaParams1D p(horizon);
  for (int k = 0; k < horizon; ++k)
    for (int j = k + 1; j <= horizon; ++j) p.set_gamma(k, j, c.gamma(j - k));
  return p;
}

std::pair<std::vector<Vector>, std::vector<Vector>> szego_recursion(const SzegoCoeffs& c,
                                                                    int n_max) {
  if (c.count() < n_max) throw invalid_input("szego_recursion: not enough coefficients");
  std::vector<Vector> phi(static_cast<size_t>(n_max) + 1);
  std::vector<Vector> sharp(static_cast<size_t>(n_max) + 1);
  phi[0] = Vector::Constant(1, cx(1.0, 0.0));
  sharp[0] = phi[0];
  for (int n = 0; n < n_max; ++n) {
    const cx g = c.gamma(n + 1);
    const double d = c.d(n + 1);
    Vector z_phi = Vector::Zero(n + 2);
    z_phi.tail(n + 1) = phi[static_cast<size_t>(n)];
    Vector prev_sharp = Vector::Zero(n + 2);
    prev_sharp.head(n + 1) = sharp[static_cast<size_t>(n)];
    phi[static_cast<size_t>(n) + 1] = (z_phi - g * prev_sharp) / d;
    sharp[static_cast<size_t>(n) + 1] = (-std::conj(g) * z_phi + prev_sharp) / d;
  }
  return {std::move(phi), std::move(sharp)};
}

bool hankel_check(const MomentKernel1D& kernel, double tolerance) {
  const int h = kernel.horizon();
  for (int k = 0; k <= h; ++k)
    for (int j = 0; j <= h; ++j) {
      const int sum = k + j;
      // Compare with the representative of the same antidiagonal.
      const int k0 = sum <= h ? 0 : sum - h;
      if (std::abs(kernel(k, j) - kernel(k0, sum - k0)) > tolerance) return false;
    }
  return true;
}

ThreeTermCoeffs three_term_from_moments(const MomentKernel1D& kernel) {
  if (!hankel_check(kernel, 1e-10))
    throw invalid_input("three_term_from_moments: kernel is not Hankel");
  const int h = kernel.horizon();
  const PolyFamily1D fam = ortho_gram_schmidt(kernel);
  // Hankel moments by index sum; entry (k, j) only depends on k + j.
  std::vector<cx> m(static_cast<size_t>(2 * h) + 1);
  for (int s = 0; s <= 2 * h; ++s) {
    const int k0 = s <= h ? 0 : s - h;
    m[static_cast<size_t>(s)] = kernel(k0, s - k0);
  }
  auto inner = [&](const Vector& pc, const Vector& qc) {
    cx acc(0.0, 0.0);
    for (int b = 0; b < pc.size(); ++b)
      for (int a = 0; a < qc.size(); ++a)
        acc += std::conj(qc(a)) * pc(b) * m[static_cast<size_t>(a + b)];
    return acc;
  };
  ThreeTermCoeffs out;
  for (int n = 0; n < h; ++n) {
    const Vector x_phi = [&] {
      Vector v = Vector::Zero(n + 2);
      v.tail(n + 1) = fam.phi(n, 0);
      return v;
    }();
    out.a.push_back(inner(x_phi, fam.phi(n, 0)).real());
    const double b = inner(x_phi, fam.phi(n + 1, 0)).real();
    if (!(b > 0.0)) throw numeric_failure("three_term_from_moments: b_n not positive");
    out.b.push_back(b);
  }
  return out;
}

std::vector<Vector> three_term_reconstruct(const ThreeTermCoeffs& coeffs, double s00,
                                           int n_max) {
  if (static_cast<int>(coeffs.b.size()) < n_max)
    throw invalid_input("three_term_reconstruct: not enough coefficients");
  std::vector<Vector> phi(static_cast<size_t>(n_max) + 1);
  phi[0] = Vector::Constant(1, cx(1.0 / std::sqrt(s00), 0.0));
  for (int n = 0; n < n_max; ++n) {
    Vector x_phi = Vector::Zero(n + 2);
    x_phi.tail(n + 1) = phi[static_cast<size_t>(n)];
    Vector acc = x_phi;
    Vector an_phi = Vector::Zero(n + 2);
    an_phi.head(n + 1) = coeffs.a[static_cast<size_t>(n)] * phi[static_cast<size_t>(n)];
    acc -= an_phi;
    if (n >= 1) {
      Vector bp = Vector::Zero(n + 2);
      bp.head(n) = coeffs.b[static_cast<size_t>(n) - 1] * phi[static_cast<size_t>(n) - 1];
      acc -= bp;
    }
    phi[static_cast<size_t>(n) + 1] = acc / coeffs.b[static_cast<size_t>(n)];
  }
  return phi;
}

double pochhammer(double x, int n) {
  if (n < 0) throw invalid_input("pochhammer: negative order");
  if (n == 0) return 1.0;
  if (x > 0.0) return std::exp(std::lgamma(x + n) - std::lgamma(x));
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= x + k;
  return prod;
}

double beta_function(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

GegenbauerClosedForm gegenbauer_closed(const GegenbauerSpec& spec) {
  const double lambda = spec.lambda;
  const int l = spec.l;
  if (!(lambda > -0.5)) throw invalid_input("gegenbauer_closed: lambda must exceed -1/2");
  if (l < 0 || spec.n < 0) throw invalid_input("gegenbauer_closed: negative index");
  const double common = pochhammer(lambda + 1.0, l) / pochhammer(0.5, l);
  GegenbauerClosedForm out{};
  if (spec.n % 2 == 0) {
    const int m = spec.n / 2;
    out.h = pochhammer(lambda + 0.5, m) * pochhammer(lambda + l, m) * (lambda + l) /
            (std::tgamma(m + 1.0) * pochhammer(l + 0.5, m) * (lambda + l + 2.0 * m));
    const double root = std::sqrt(common / out.h);
    out.k_lead = pochhammer(lambda + l, 2 * m) /
                 (pochhammer(l + 0.5, m) * std::tgamma(m + 1.0)) * root;
    // The recurrence C_{2m+2}(0) = -((lambda+l+m)/(m+1)) C_{2m}(0) iterates
    // to the sign (-1)^m; the quadrature pipeline confirms it.
    double prod = 1.0;
    for (int k = 1; k <= m; ++k) prod *= (lambda + l + k - 1.0) / k;
    out.phi_at_zero = (m % 2 == 0 ? 1.0 : -1.0) * root * prod;
  } else {
    const int m = (spec.n - 1) / 2;
    out.h = pochhammer(lambda + 0.5, m) * pochhammer(lambda + l, m + 1) * (lambda + l) /
            (std::tgamma(m + 1.0) * pochhammer(l + 0.5, m + 1) *
             (lambda + l + 2.0 * m + 1.0));
    const double root = std::sqrt(common / out.h);
    out.k_lead = pochhammer(lambda + l, 2 * m + 1) /
                 (pochhammer(l + 0.5, m + 1) * std::tgamma(m + 1.0)) * root;
    out.phi_at_zero = 0.0;
  }
  return out;
}

double gegenbauer_gamma(double lambda, int l, int n) {
  if (n < 1) throw invalid_input("gegenbauer_gamma: offset must be >= 1");
  if (n % 2 == 1) return 0.0;
  double quotient = 1.0;
  for (int q = 0; q < n; ++q)
    quotient *= gegenbauer_closed({lambda, l + 1, q}).k_lead;
  for (int q = 0; q <= n; ++q)
    quotient /= gegenbauer_closed({lambda, l, q}).k_lead;
  return -gegenbauer_closed({lambda, l, n}).phi_at_zero * quotient;
}

double gegenbauer_weight_integral(double lambda, int monomial_power) {
  if (monomial_power % 2 == 1) return 0.0;
  // x = sin(theta) turns the weight into cos(theta)^(2 lambda), removing the
  // endpoint singularity for lambda < 1/2.
  const int nodes = monomial_power + 64;
  const QuadratureRule rule = gauss_legendre(nodes, -M_PI / 2.0, M_PI / 2.0);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = std::sin(rule.nodes[i]);
    const double c = std::cos(rule.nodes[i]);
    acc += rule.weights[i] * std::pow(s, monomial_power) * std::pow(c, 2.0 * lambda);
  }
  return acc / beta_function(0.5, lambda + 0.5);
}

namespace {

MomentKernel1D assemble_weight_moments(int l, int horizon, const std::vector<double>& m) {
  Matrix k(horizon + 1, horizon + 1);
  for (int i = 0; i <= horizon; ++i)
    for (int j = 0; j <= horizon; ++j)
      k(i, j) = m[static_cast<size_t>(i + j + 2 * l)];
  return MomentKernel1D(std::move(k));
}

}  // namespace

MomentKernel1D weight_moments_quadrature(double lambda, int l, int horizon) {
  if (!(lambda > -0.5)) throw invalid_input("weight_moments_quadrature: bad lambda");
  if (l < 0 || horizon < 0) throw invalid_input("weight_moments_quadrature: bad index");
  std::vector<double> m(static_cast<size_t>(2 * horizon + 2 * l) + 1, 0.0);
  parallel_for(static_cast<std::ptrdiff_t>(m.size()), [&](std::ptrdiff_t s) {
    m[static_cast<size_t>(s)] = gegenbauer_weight_integral(lambda, static_cast<int>(s));
  });
  return assemble_weight_moments(l, horizon, m);
}

namespace ref {
MomentKernel1D weight_moments_quadrature(double lambda, int l, int horizon) {
  if (!(lambda > -0.5)) throw invalid_input("weight_moments_quadrature: bad lambda");
  if (l < 0 || horizon < 0) throw invalid_input("weight_moments_quadrature: bad index");
  std::vector<double> m(static_cast<size_t>(2 * horizon + 2 * l) + 1, 0.0);
  for (size_t s = 0; s < m.size(); ++s)
    m[s] = gegenbauer_weight_integral(lambda, static_cast<int>(s));
  return assemble_weight_moments(l, horizon, m);
}
}  // namespace ref

}  // namespace ncortho
