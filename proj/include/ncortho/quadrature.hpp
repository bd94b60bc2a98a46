#ifndef NCORTHO_QUADRATURE_HPP
#define NCORTHO_QUADRATURE_HPP

#include <vector>

namespace ncortho {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n - 1.
QuadratureRule gauss_legendre(int n);

// Same rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace ncortho

#endif
