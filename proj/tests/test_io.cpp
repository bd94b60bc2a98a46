#include <doctest.h>

#include <sstream>

#include "ncortho/io.hpp"
#include "test_support.hpp"

using namespace ncortho;
using ncortho::testing::Rng;

TEST_CASE("complex text format") {
  CHECK(io::format_complex(cx(1.0, 0.0)) == "1+0i");
  CHECK(io::format_complex(cx(-0.5, 0.25)) == "-0.5+0.25i");
  CHECK(io::format_complex(cx(0.0, -2.0)) == "0-2i");
  CHECK(io::parse_complex("1+0i") == cx(1.0, 0.0));
  CHECK(io::parse_complex("-0.5+0.25i") == cx(-0.5, 0.25));
  CHECK(io::parse_complex("0-2i") == cx(0.0, -2.0));
  CHECK(io::parse_complex("\"1+0i\"") == cx(1.0, 0.0));
  CHECK(io::parse_complex("3.5") == cx(3.5, 0.0));
  CHECK(io::parse_complex("1e-3+2e-4i") == cx(1e-3, 2e-4));
  CHECK_THROWS_AS(io::parse_complex(""), invalid_input);

  Rng rng(601);
  for (int trial = 0; trial < 50; ++trial) {
    const cx z = ncortho::testing::random_disk(rng, 10.0);
    CHECK(io::parse_complex(io::format_complex(z)) == z);
  }
}

TEST_CASE("moment kernel csv roundtrip") {
  Rng rng(607);
  const GammaParams1D p = ncortho::testing::random_params(rng, 6, 0.9);
  const MomentKernel1D k = moments_from_params(p);
  std::ostringstream os;
  io::write_moment_csv(os, k);
  // Cells with a '+' must be quoted.
  CHECK(os.str().find("\"") != std::string::npos);
  std::istringstream is(os.str());
  const MomentKernel1D back = io::read_moment_csv(is);
  CHECK((back.matrix() - k.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gamma parameter json roundtrip") {
  Rng rng(613);
  const GammaParams1D p = ncortho::testing::random_params(rng, 7, 0.9);
  const GammaParams1D back = io::gamma_params_from_json(io::gamma_params_to_json(p));
  CHECK(back.horizon() == p.horizon());
  for (int k = 0; k <= 7; ++k) CHECK(back.diag(k) == p.diag(k));
  for (int k = 0; k < 7; ++k)
    for (int j = k + 1; j <= 7; ++j) CHECK(back.gamma(k, j) == p.gamma(k, j));
}

TEST_CASE("cuntz-toeplitz parameter json roundtrip") {
  Rng rng(617);
  const GammaParamsCT p = ncortho::testing::random_ct_params(rng, 2, 3, 0.8);
  const GammaParamsCT back = io::gamma_ct_from_json(io::gamma_ct_to_json(p));
  CHECK(back.alphabet() == 2);
  CHECK(back.max_len() == 3);
  for (const Word& word : p.words())
    if (!word.empty()) CHECK(back.gamma(word) == p.gamma(word));
}

TEST_CASE("jacobi family json roundtrip") {
  Rng rng(619);
  const JacobiFamily fam = ncortho::testing::random_jacobi(rng, 2, 3);
  const JacobiFamily back = io::jacobi_from_json(io::jacobi_to_json(fam));
  CHECK(back.depth() == fam.depth());
  for (int n = 0; n < fam.depth(); ++n)
    for (int k = 1; k <= 2; ++k) {
      CHECK((back.A(n, k) - fam.A(n, k)).cwiseAbs().maxCoeff() == 0.0);
      CHECK((back.B(n, k) - fam.B(n, k)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("ct kernel json lists comparable pairs only") {
  GammaParamsCT p(2, 2);
  p.set_gamma(Word(2, {1}), cx(0.5, 0.0));
  const io::json j = io::ct_kernel_to_json(ct_kernel_from_gamma(p));
  for (const auto& entry : j) {
    const Word sigma = Word::parse(2, entry.at("sigma").get<std::string>());
    const Word tau = Word::parse(2, entry.at("tau").get<std::string>());
    CHECK((sigma.is_prefix_of(tau) || tau.is_prefix_of(sigma)));
  }
}

TEST_CASE("matrix json roundtrip") {
  Rng rng(631);
  const Matrix m = ncortho::testing::random_matrix(rng, 3, 4, 2.0);
  const Matrix back = io::matrix_from_json(io::matrix_to_json(m));
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("operator tuple json roundtrip") {
  Rng rng(641);
  const OperatorPoint z = ncortho::testing::random_operator_point(rng, 3, 2);
  const OperatorPoint back = io::operator_point_from_json(io::operator_point_to_json(z));
  for (int k = 0; k < 3; ++k)
    CHECK((back.component(k) - z.component(k)).cwiseAbs().maxCoeff() == 0.0);
}
