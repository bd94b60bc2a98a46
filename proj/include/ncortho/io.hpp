#ifndef NCORTHO_IO_HPP
#define NCORTHO_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ncortho/fock_multivar.hpp"
#include "ncortho/hermitian_jacobi.hpp"
#include "ncortho/ortho_one_var.hpp"
#include "ncortho/schur_params.hpp"
#include "ncortho/szego_kernels.hpp"

namespace ncortho::io {

using nlohmann::json;

// Complex text format "a+bi", emitted with 17 significant digits.
std::string format_complex(const cx& z);
cx parse_complex(const std::string& text);
std::string format_double(double x);

// Moment kernels as row-major CSV; cells are quoted when they contain '+'.
void write_moment_csv(std::ostream& os, const MomentKernel1D& kernel);
MomentKernel1D read_moment_csv(std::istream& is);

// Lower triangular arrays reuse the moment CSV cell format.
void write_matrix_csv(std::ostream& os, const Matrix& matrix);

json gamma_params_to_json(const GammaParams1D& p);
GammaParams1D gamma_params_from_json(const json& j);

json gamma_ct_to_json(const GammaParamsCT& p);
GammaParamsCT gamma_ct_from_json(const json& j);

json ct_kernel_to_json(const CTKernel& kernel);

json poly_family_to_json(const PolyFamily1D& fam);

json jacobi_to_json(const JacobiFamily& j);
JacobiFamily jacobi_from_json(const json& j);

json moments_to_json(const HermitianMoments& m);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Operator tuples as JSON arrays of row-major complex matrices.
json operator_point_to_json(const OperatorPoint& z);
OperatorPoint operator_point_from_json(const json& j);

// Files; throw invalid_input with the path on failure.
json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);
std::string load_text(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace ncortho::io

#endif
