#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohcast/states.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace cohcast;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

Mat4c mcs_projector() {
  Eigen::Vector4cd v;
  v << 0.5, 0.5, 0.5, 0.5;
  return v * v.adjoint();
}

double max_abs_diff(const MatXc& a, const MatXc& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("bloch_to_density on reference states") {
  SUBCASE("maximally mixed") {
    const Mat4c rho = bloch_to_density(BlochTwoQubit{});
    CHECK(max_abs_diff(rho, 0.25 * Mat4c::Identity()) < 1e-15);
  }
  SUBCASE("uniform superposition projector at p = 1") {
    const Mat4c rho = bloch_to_density(mcs_mis_mixture(1.0));
    Mat4c quarter = Mat4c::Constant(Complex{0.25, 0.0});
    CHECK(max_abs_diff(rho, quarter) < 1e-15);
  }
  SUBCASE("T = diag(1,-1,1) is the Phi+ projector") {
    BlochTwoQubit s;
    s.T(0, 0) = 1.0;
    s.T(1, 1) = -1.0;
    s.T(2, 2) = 1.0;
    CHECK(max_abs_diff(bloch_to_density(s), bell_projector(0)) < 1e-15);
  }
}

TEST_CASE("density_to_bloch on reference states") {
  SUBCASE("maximally mixed") {
    const BlochTwoQubit s = density_to_bloch(0.25 * Mat4c::Identity());
    CHECK(s.x.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(s.y.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(s.T.cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("Phi+ projector") {
    const BlochTwoQubit s = density_to_bloch(bell_projector(0));
    CHECK(std::abs(s.T(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(s.T(1, 1) + 1.0) < 1e-14);
    CHECK(std::abs(s.T(2, 2) - 1.0) < 1e-14);
    CHECK(s.x.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(s.y.cwiseAbs().maxCoeff() < 1e-14);
    Mat3 offdiag = s.T;
    offdiag.diagonal().setZero();
    CHECK(offdiag.cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("rejects wrong dimension") {
    CHECK_THROWS_AS(density_to_bloch(MatXc::Identity(2, 2)), std::invalid_argument);
  }
  SUBCASE("rejects non-Hermitian input") {
    Mat4c rho = 0.25 * Mat4c::Identity();
    rho(0, 1) = Complex{0.2, 0.0};  // no conjugate partner
    CHECK_THROWS_AS(density_to_bloch(rho), std::invalid_argument);
  }
}

TEST_CASE("round trips between Bloch and density forms") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SUBCASE("random valid states, density -> bloch -> density") {
    for (int n = 0; n < 300; ++n) {
      const MatXc rho = sample_random_density(4, rng);
      CHECK(max_abs_diff(bloch_to_density(density_to_bloch(rho)), rho) < 1e-13);
    }
  }
  SUBCASE("random Bloch parameters, bloch -> density -> bloch") {
    for (int n = 0; n < 300; ++n) {
      BlochTwoQubit s;
      s.x = 0.5 * Vec3(u(rng), u(rng), u(rng));
      s.y = 0.5 * Vec3(u(rng), u(rng), u(rng));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s.T(i, j) = u(rng);
      const BlochTwoQubit back = density_to_bloch(bloch_to_density(s));
      CHECK((back.x - s.x).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((back.y - s.y).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((back.T - s.T).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  SUBCASE("reconstruction is Hermitian with unit trace") {
    for (int n = 0; n < 100; ++n) {
      BlochTwoQubit s;
      s.x = 0.5 * Vec3(u(rng), u(rng), u(rng));
      s.y = 0.5 * Vec3(u(rng), u(rng), u(rng));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s.T(i, j) = u(rng);
      const Mat4c rho = bloch_to_density(s);
      CHECK(std::abs(rho.trace().real() - 1.0) < 1e-15);
      CHECK(std::abs(rho.trace().imag()) < 1e-15);
      CHECK(max_abs_diff(rho, rho.adjoint()) < 1e-14);
    }
  }
}

TEST_CASE("validate_state") {
  SUBCASE("maximally mixed") {
    const ValidityReport r = validate_state(0.25 * Mat4c::Identity());
    CHECK(r.valid);
    CHECK(std::abs(r.min_eigenvalue - 0.25) < 1e-14);
  }
  SUBCASE("pure product Bloch vectors without correlations are non-physical") {
    BlochTwoQubit s;
    s.x = Vec3(1, 0, 0);
    s.y = Vec3(1, 0, 0);
    const ValidityReport r = validate_state(bloch_to_density(s));
    CHECK_FALSE(r.valid);
    CHECK(r.min_eigenvalue < -kPsdTol);
  }
  SUBCASE("Bell projector sits on the PSD boundary") {
    const ValidityReport r = validate_state(bell_projector(0));
    CHECK(r.valid);
    CHECK(std::abs(r.min_eigenvalue) < 1e-12);
  }
}

TEST_CASE("mcs_mis_mixture") {
  SUBCASE("endpoints") {
    const BlochTwoQubit mis = mcs_mis_mixture(0.0);
    CHECK(mis.x.cwiseAbs().maxCoeff() == 0.0);
    CHECK(mis.T.cwiseAbs().maxCoeff() == 0.0);
    const BlochTwoQubit mcs = mcs_mis_mixture(1.0);
    CHECK(mcs.x == Vec3(1, 0, 0));
    CHECK(mcs.y == Vec3(1, 0, 0));
    CHECK(mcs.T(0, 0) == 1.0);
  }
  SUBCASE("p = 0.5 equals the direct convex combination") {
    const Mat4c direct = 0.5 * mcs_projector() + 0.5 * 0.25 * Mat4c::Identity();
    CHECK(max_abs_diff(bloch_to_density(mcs_mis_mixture(0.5)), direct) < 1e-14);
  }
  SUBCASE("rejects weights outside [0,1]") {
    CHECK_THROWS_AS(mcs_mis_mixture(-0.1), std::domain_error);
    CHECK_THROWS_AS(mcs_mis_mixture(1.1), std::domain_error);
    CHECK_THROWS_AS(mcs_mis_mixture(std::nan("")), std::domain_error);
  }
}

TEST_CASE("beta coordinate transform") {
  SUBCASE("Bell vertex") {
    const BetaCoords b = beta_from_probs(BellProbs{1, 0, 0, 0});
    CHECK(b.beta1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.beta2 == doctest::Approx(1.0 / kSqrt2).epsilon(1e-15));
    CHECK(b.beta3 == 0.0);
  }
  SUBCASE("uniform mixture maps to the origin") {
    const BetaCoords b = beta_from_probs(BellProbs{0.25, 0.25, 0.25, 0.25});
    CHECK(std::abs(b.beta1) < 1e-16);
    CHECK(std::abs(b.beta2) < 1e-16);
    CHECK(std::abs(b.beta3) < 1e-16);
  }
  SUBCASE("(0, 1/2, 1/2, 0)") {
    const BetaCoords b = beta_from_probs(BellProbs{0, 0.5, 0.5, 0});
    CHECK(b.beta1 == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(b.beta2 == 0.0);
    CHECK(b.beta3 == 0.0);
  }
  SUBCASE("invalid probability vectors rejected") {
    CHECK_THROWS_AS(beta_from_probs(BellProbs{0.5, 0.5, 0.5, -0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(beta_from_probs(BellProbs{0.3, 0.3, 0.3, 0.3}),
                    std::invalid_argument);
  }
  SUBCASE("beta0 is always 1/2") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 200; ++n) {
      double p[4];
      double sum = 0.0;
      for (double& v : p) sum += (v = u(rng) + 1e-3);
      const BellProbs bp{p[0] / sum, p[1] / sum, p[2] / sum, p[3] / sum};
      CHECK(std::abs(0.5 * (bp.p1 + bp.p2 + bp.p3 + bp.p4) - 0.5) < 1e-15);
      (void)beta_from_probs(bp);
    }
  }
}

TEST_CASE("probs_from_beta") {
  SUBCASE("origin is the uniform mixture") {
    const BellProbs bp = probs_from_beta(BetaCoords{0, 0, 0});
    CHECK(bp.p1 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(bp.p2 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(bp.p3 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(bp.p4 == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("table boundary point has p4 ~ 0") {
    const BellProbs bp = probs_from_beta(BetaCoords{0.2, 0.495, -0.2});
    CHECK(std::abs(bp.p4 - 0.5 * (0.7 - kSqrt2 * 0.495)) < 1e-15);
    CHECK(std::abs(bp.p4) < 1e-4);
  }
  SUBCASE("mutual inverse with beta_from_probs") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 300; ++n) {
      double p[4];
      double sum = 0.0;
      for (double& v : p) sum += (v = u(rng) + 1e-6);
      const BellProbs bp{p[0] / sum, p[1] / sum, p[2] / sum, p[3] / sum};
      const BellProbs back = probs_from_beta(beta_from_probs(bp));
      CHECK(std::abs(back.p1 - bp.p1) < 1e-14);
      CHECK(std::abs(back.p2 - bp.p2) < 1e-14);
      CHECK(std::abs(back.p3 - bp.p3) < 1e-14);
      CHECK(std::abs(back.p4 - bp.p4) < 1e-14);
      const BetaCoords b = beta_from_probs(bp);
      const BetaCoords b2 = beta_from_probs(probs_from_beta(b));
      CHECK(std::abs(b2.beta1 - b.beta1) < 1e-14);
      CHECK(std::abs(b2.beta2 - b.beta2) < 1e-14);
      CHECK(std::abs(b2.beta3 - b.beta3) < 1e-14);
    }
  }
}

TEST_CASE("in_tetrahedron") {
  CHECK(in_tetrahedron(BetaCoords{0, 0, 0}));
  CHECK_FALSE(in_tetrahedron(BetaCoords{0.2, 0.50, -0.2}));
  CHECK(in_tetrahedron(BetaCoords{0.5, 1.0 / kSqrt2, 0}));
}

TEST_CASE("bds_to_bloch") {
  SUBCASE("origin") {
    const BlochTwoQubit s = bds_to_bloch(BetaCoords{0, 0, 0});
    CHECK(s.T.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("vertex maps to Phi+") {
    const BlochTwoQubit s = bds_to_bloch(BetaCoords{0.5, 1.0 / kSqrt2, 0});
    CHECK(max_abs_diff(bloch_to_density(s), bell_projector(0)) < 1e-14);
  }
  SUBCASE("beta1 = -1/2 gives diag(0,1,0)") {
    const BlochTwoQubit s = bds_to_bloch(BetaCoords{-0.5, 0, 0});
    Mat3 expected = Mat3::Zero();
    expected(1, 1) = 1.0;
    CHECK((s.T - expected).cwiseAbs().maxCoeff() < 1e-15);
    // p2 = p3 = 1/2, i.e. the even mixture of its two vertex projectors.
    const Mat4c mix = 0.5 * (bell_projector(1) + bell_projector(2));
    CHECK(max_abs_diff(bloch_to_density(s), mix) < 1e-14);
  }
  SUBCASE("all four vertices land on the four Bell projectors") {
    const BellProbs vertices[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    // Vertex k -> projector under this sign convention.
    const int projector_of_vertex[4] = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
      const Mat4c rho = bloch_to_density(bds_to_bloch(beta_from_probs(vertices[k])));
      CHECK(max_abs_diff(rho, bell_projector(projector_of_vertex[k])) < 1e-14);
    }
  }
  SUBCASE("tetrahedron points are physical states") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 200; ++n) {
      double p[4];
      double sum = 0.0;
      for (double& v : p) sum += (v = u(rng));
      const BetaCoords b =
          beta_from_probs(BellProbs{p[0] / sum, p[1] / sum, p[2] / sum, p[3] / sum});
      REQUIRE(in_tetrahedron(b));
      CHECK(validate_state(bloch_to_density(bds_to_bloch(b))).valid);
    }
  }
  SUBCASE("rejects non-physical coordinates") {
    CHECK_THROWS_AS(bds_to_bloch(BetaCoords{0.2, 0.50, -0.2}), std::domain_error);
  }
}

TEST_CASE("is_separable_bds") {
  CHECK(is_separable_bds(BellProbs{0.25, 0.25, 0.25, 0.25}));
  CHECK_FALSE(is_separable_bds(BellProbs{1, 0, 0, 0}));
  CHECK(is_separable_bds(BellProbs{0.5, 0.5, 0, 0}));
}

TEST_CASE("random state sampler produces valid states") {
  std::mt19937_64 rng(1234);
  for (int n = 0; n < 100; ++n) {
    const BlochTwoQubit s = sample_random_state(rng);
    CHECK(s.x.norm() <= 1.0 + 1e-12);
    CHECK(s.y.norm() <= 1.0 + 1e-12);
    CHECK(validate_state(bloch_to_density(s)).valid);
  }
}
