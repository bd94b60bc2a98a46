#include <doctest.h>

#include "ncortho/classical_cases.hpp"
#include "ncortho/hermitian_jacobi.hpp"
#include "ncortho/schur_params.hpp"
#include "test_support.hpp"

using namespace ncortho;
using ncortho::testing::Rng;

// Each parallel kernel computes every slot independently with the same
// operation order as its serial reference, so results are bit-identical.

TEST_CASE("forward map: parallel equals serial") {
  Rng rng(701);
  for (int trial = 0; trial < 3; ++trial) {
    const GammaParams1D p = ncortho::testing::random_params(rng, 24, 0.9);
    CHECK((moments_from_params(p).matrix() - ref::moments_from_params(p).matrix())
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
}

TEST_CASE("weight moments: parallel equals serial") {
  for (double lambda : {0.5, 2.5}) {
    const MomentKernel1D par = weight_moments_quadrature(lambda, 2, 7);
    const MomentKernel1D ser = ref::weight_moments_quadrature(lambda, 2, 7);
    CHECK((par.matrix() - ser.matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("gns moments: parallel equals serial") {
  Rng rng(709);
  const JacobiFamily fam = ncortho::testing::random_jacobi(rng, 2, 3);
  const HermitianMoments par = moments_from_jacobi(fam, 3);
  const HermitianMoments ser = ref::moments_from_jacobi(fam, 3);
  for (const Word& w : enumerate_words(2, 6)) CHECK(par.at(w) == ser.at(w));
}
