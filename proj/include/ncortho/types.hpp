#ifndef NCORTHO_TYPES_HPP
#define NCORTHO_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ncortho {

using cx = std::complex<double>;

// Thrown when an input violates a documented precondition (bad indices,
// moduli >= 1, non positive definite data, malformed files).
class invalid_input : public std::runtime_error {
public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numerical identity that should hold for valid inputs fails
// beyond tolerance; signals degeneracy rather than a caller error.
class numeric_failure : public std::runtime_error {
public:
  explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
// Structural identities (unitarity, triangular products, exact formulas).
inline constexpr double structural = 1e-10;
// Roundtrips through a forward/inverse pair.
inline constexpr double roundtrip = 1e-9;
// Orthogonalization pipelines (Gram-Schmidt vs recurrences).
inline constexpr double ortho = 1e-8;
// Strictness margin below which |gamma| counts as 1.
inline constexpr double gamma_margin = 1e-12;
}  // namespace tol

// Defect d = (1 - |gamma|^2)^(1/2) of a strict contraction.
inline double defect(const cx& gamma) { return std::sqrt(1.0 - std::norm(gamma)); }

inline void require_strict_contraction(const cx& gamma, const char* where) {
  if (!(std::norm(gamma) < 1.0 - tol::gamma_margin))
    throw invalid_input(std::string(where) + ": |gamma| >= 1");
}

}  // namespace ncortho

#endif
