#include <doctest.h>

#include "ncortho/classical_cases.hpp"
#include "ncortho/quadrature.hpp"
#include "test_support.hpp"

using namespace ncortho;
using ncortho::testing::Rng;

namespace {

double coeff_distance(const Vector& a, const Vector& b) {
  double out = 0.0;
  const auto n = std::max(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const cx av = i < a.size() ? a(i) : cx(0.0, 0.0);
    const cx bv = i < b.size() ? b(i) : cx(0.0, 0.0);
    out = std::max(out, std::abs(av - bv));
  }
  return out;
}

// Jacobi polynomial values by the classical three-term recurrence;
// independent oracle for the closed forms below.
double jacobi_poly(int n, double alpha, double beta, double y) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * y;
  for (int m = 2; m <= n; ++m) {
    const double a = 2.0 * m * (m + alpha + beta) * (2.0 * m + alpha + beta - 2.0);
    const double b = (2.0 * m + alpha + beta - 1.0) *
                     ((2.0 * m + alpha + beta) * (2.0 * m + alpha + beta - 2.0) * y +
                      alpha * alpha - beta * beta);
    const double c =
        2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + alpha + beta);
    const double p2 = (b * p1 - c * p0) / a;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// The auxiliary even/odd polynomials whose squared norm is h^{lambda,l}_n.
double c_poly(double lambda, int l, int n, double x) {
  if (n % 2 == 0) {
    const int m = n / 2;
    return pochhammer(lambda + l, m) / pochhammer(l + 0.5, m) *
           jacobi_poly(m, lambda - 0.5, l - 0.5, 2.0 * x * x - 1.0);
  }
  const int m = (n - 1) / 2;
  return pochhammer(lambda + l, m + 1) / pochhammer(l + 0.5, m + 1) * x *
         jacobi_poly(m, lambda - 0.5, l + 0.5, 2.0 * x * x - 1.0);
}

// Quadrature value of int x^{2l} C_n(x)^2 w(x) dx rescaled to h.
double h_oracle(double lambda, int l, int n) {
  const QuadratureRule rule = gauss_legendre(2 * n + 2 * l + 80, -M_PI / 2.0, M_PI / 2.0);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = std::sin(rule.nodes[i]);
    const double c = std::cos(rule.nodes[i]);
    const double v = c_poly(lambda, l, n, x);
    acc += rule.weights[i] * std::pow(x, 2 * l) * v * v * std::pow(c, 2.0 * lambda);
  }
  acc /= beta_function(0.5, lambda + 0.5);
  return acc * pochhammer(lambda + 1.0, l) / pochhammer(0.5, l);
}

}  // namespace

TEST_CASE("toeplitz lift and classical szego recursion") {
  SUBCASE("zero coefficients give monomials") {
    const SzegoCoeffs c(std::vector<cx>(6, cx(0.0, 0.0)));
    const auto [phi, sharp] = szego_recursion(c, 6);
    for (int n = 0; n <= 6; ++n)
      for (int i = 0; i <= n; ++i)
        CHECK(phi[static_cast<size_t>(n)](i) == (i == n ? cx(1.0, 0.0) : cx(0.0, 0.0)));
  }
  SUBCASE("one nonzero coefficient") {
    const SzegoCoeffs c({cx(0.5, 0.0), cx(0.0, 0.0)});
    const auto [phi, sharp] = szego_recursion(c, 1);
    CHECK(phi[1](0).real() == doctest::Approx(-0.5 / std::sqrt(0.75)));
    CHECK(phi[1](1).real() == doctest::Approx(1.0 / std::sqrt(0.75)));
  }
  SUBCASE("general machinery is shift independent and matches the recursion") {
    Rng rng(211);
    std::vector<cx> coeffs;
    for (int n = 0; n < 8; ++n) coeffs.push_back(ncortho::testing::random_disk(rng, 0.8));
    const SzegoCoeffs c(coeffs);
    const GammaParams1D lift = toeplitz_lift(c, 8);
    const PolyFamily1D fam = ortho_recurrence(lift, 8, 0);
    const auto [phi, sharp] = szego_recursion(c, 8);
    for (int n = 0; n <= 8; ++n) {
      for (int l = 0; n + l <= 8; ++l)
        CHECK(coeff_distance(fam.phi(n, l), fam.phi(n, 0)) < 1e-10);
      CHECK(coeff_distance(fam.phi(n, 0), phi[static_cast<size_t>(n)]) < 1e-10);
      CHECK(coeff_distance(fam.phisharp(n, 0), sharp[static_cast<size_t>(n)]) < 1e-10);
    }
  }
}

TEST_CASE("hankel detection") {
  SUBCASE("hilbert kernel is hankel") {
    Matrix m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = 1.0 / (i + j + 1.0);
    CHECK(hankel_check(MomentKernel1D(m)));
  }
  SUBCASE("nonconstant toeplitz kernel is not") {
    Matrix m = Matrix::Identity(4, 4);
    for (int i = 0; i + 1 < 4; ++i) {
      m(i, i + 1) = 0.4;
      m(i + 1, i) = 0.4;
    }
    CHECK_FALSE(hankel_check(MomentKernel1D(m)));
    CHECK_THROWS_AS(three_term_from_moments(MomentKernel1D(m)), invalid_input);
  }
}

TEST_CASE("semicircle three-term coefficients") {
  const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  Matrix m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      m(i, j) = (i + j) % 2 == 0 ? static_cast<double>(catalan[(i + j) / 2]) : 0.0;
  const MomentKernel1D k(m);
  REQUIRE(hankel_check(k));
  const ThreeTermCoeffs coeffs = three_term_from_moments(k);
  for (double a : coeffs.a) CHECK(std::abs(a) < 1e-10);
  for (double b : coeffs.b) CHECK(b == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("three-term reconstruction reproduces the family") {
  Rng rng(223);
  // Hankel moments from a random positive weight on a grid.
  const int points = 40;
  std::vector<double> xs, ws;
  std::uniform_real_distribution<double> ux(-1.0, 1.0), uw(0.1, 1.0);
  for (int i = 0; i < points; ++i) {
    xs.push_back(ux(rng));
    ws.push_back(uw(rng));
  }
  const int h = 5;
  Matrix m(h + 1, h + 1);
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= h; ++j) {
      double acc = 0.0;
      for (int t = 0; t < points; ++t)
        acc += ws[static_cast<size_t>(t)] * std::pow(xs[static_cast<size_t>(t)], i + j);
      m(i, j) = acc;
    }
  const MomentKernel1D k(m);
  const ThreeTermCoeffs coeffs = three_term_from_moments(k);
  const std::vector<Vector> rebuilt =
      three_term_reconstruct(coeffs, k(0, 0).real(), h - 1);
  const PolyFamily1D gs = ortho_gram_schmidt(k);
  for (int n = 0; n + 1 <= h; ++n)
    CHECK(coeff_distance(rebuilt[static_cast<size_t>(n)], gs.phi(n, 0)) < 1e-8);
}

TEST_CASE("weight normalization and moment structure") {
  for (double lambda : {0.5, 1.0, 2.5}) {
    CHECK(gegenbauer_weight_integral(lambda, 0) == doctest::Approx(1.0).epsilon(1e-12));
    const MomentKernel1D k = weight_moments_quadrature(lambda, 1, 4);
    CHECK(hankel_check(k, 1e-12));
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        CHECK(k(i, j).imag() == 0.0);
        if ((i + j) % 2 == 1) CHECK(std::abs(k(i, j)) < 1e-15);
      }
  }
}

TEST_CASE("gegenbauer closed forms") {
  SUBCASE("pinned values at lambda = 1/2") {
    const GegenbauerClosedForm f = gegenbauer_closed({0.5, 0, 2});
    CHECK(f.h == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(f.phi_at_zero == doctest::Approx(-0.5 / std::sqrt(0.2)).epsilon(1e-12));
    const GegenbauerClosedForm f1 = gegenbauer_closed({0.5, 0, 1});
    CHECK(f1.k_lead == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(f1.phi_at_zero == 0.0);
  }
  SUBCASE("odd degrees vanish at the origin") {
    for (double lambda : {0.5, 1.0, 2.5})
      for (int l = 0; l <= 3; ++l)
        for (int n = 1; n <= 7; n += 2)
          CHECK(gegenbauer_closed({lambda, l, n}).phi_at_zero == 0.0);
  }
  SUBCASE("match the quadrature pipeline") {
    for (double lambda : {0.5, 1.0, 2.5}) {
      for (int l = 0; l <= 2; ++l) {
        const MomentKernel1D k = weight_moments_quadrature(lambda, l, 6);
        const PolyFamily1D gs = ortho_gram_schmidt(k);
        for (int n = 0; n <= 6; ++n) {
          const GegenbauerClosedForm f = gegenbauer_closed({lambda, l, n});
          CHECK(f.k_lead == doctest::Approx(gs.leading(n, 0)).epsilon(1e-7));
          CHECK(std::abs(f.phi_at_zero - gs.phi(n, 0)(0).real()) < 1e-7);
          CHECK(f.h == doctest::Approx(h_oracle(lambda, l, n)).epsilon(1e-7));
        }
      }
    }
  }
}

TEST_CASE("gegenbauer parameters") {
  SUBCASE("odd offsets vanish") {
    for (int n = 1; n <= 7; n += 2) CHECK(gegenbauer_gamma(1.0, 2, n) == 0.0);
  }
  SUBCASE("pinned legendre-type value") {
    CHECK(gegenbauer_gamma(0.5, 0, 2) ==
          doctest::Approx(std::sqrt(5.0) / 3.0).epsilon(1e-12));
  }
  SUBCASE("closed form matches the inverse-map pipeline") {
    for (double lambda : {0.5, 1.0, 2.5})
      for (int l = 0; l <= 2; ++l) {
        const MomentKernel1D k = weight_moments_quadrature(lambda, l, 6);
        const GammaParams1D p = params_from_moments(k);
        for (int n = 1; n <= 6; ++n) {
          const double closed = gegenbauer_gamma(lambda, l, n);
          CHECK(std::abs(closed - p.gamma(0, n).real()) < 1e-7);
          CHECK(std::abs(p.gamma(0, n).imag()) < 1e-10);
          CHECK(std::abs(closed) < 1.0);
        }
      }
  }
  SUBCASE("real and strictly inside the disk over the grid") {
    for (double lambda : {0.5, 1.0, 2.5})
      for (int l = 0; l <= 4; ++l)
        for (int n = 1; n <= 8; ++n) CHECK(std::abs(gegenbauer_gamma(lambda, l, n)) < 1.0);
  }
}
