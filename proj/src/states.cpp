#include "cohcast/states.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cohcast {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<Mat2c, 4> make_paulis() {
  std::array<Mat2c, 4> s;
  s[0] = Mat2c::Identity();
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -kI, kI, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

const std::array<Mat2c, 4>& paulis() {
  static const std::array<Mat2c, 4> s = make_paulis();
  return s;
}

Mat4c kron22(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// sigma_i (x) sigma_j for i,j in 0..3 (0 = identity), built once.
const Mat4c& sigma_pair(int i, int j) {
  static const std::array<Mat4c, 16> table = [] {
    std::array<Mat4c, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[4 * i + j] = kron22(paulis()[i], paulis()[j]);
    return t;
  }();
  return table[4 * i + j];
}

}  // namespace

const Mat2c& pauli(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("pauli index must be 1, 2 or 3");
  return paulis()[i];
}

Mat4c bloch_to_density(const BlochTwoQubit& s) {
  Mat4c rho = sigma_pair(0, 0);
  for (int i = 0; i < 3; ++i) {
    rho += s.x[i] * sigma_pair(i + 1, 0);
    rho += s.y[i] * sigma_pair(0, i + 1);
    for (int j = 0; j < 3; ++j) rho += s.T(i, j) * sigma_pair(i + 1, j + 1);
  }
  return 0.25 * rho;
}

BlochTwoQubit density_to_bloch(const MatXc& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("density_to_bloch expects a 4x4 matrix");
  BlochTwoQubit s;
  double max_imag = 0.0;
  auto project = [&](int i, int j) {
    const Complex v = (rho * sigma_pair(i, j)).trace();
    max_imag = std::max(max_imag, std::abs(v.imag()));
    return v.real();
  };
  for (int i = 0; i < 3; ++i) {
    s.x[i] = project(i + 1, 0);
    s.y[i] = project(0, i + 1);
    for (int j = 0; j < 3; ++j) s.T(i, j) = project(i + 1, j + 1);
  }
  if (max_imag > 1e-10)
    throw std::invalid_argument("density_to_bloch: non-Hermitian input");
  return s;
}

ValidityReport validate_state(const MatXc& rho) {
  ValidityReport r;
  r.hermiticity_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  r.trace_residual = std::abs(rho.trace() - Complex{1.0, 0.0});
  const MatXc herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<MatXc> es(herm, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.valid = r.hermiticity_residual <= kHermitianTol && r.trace_residual <= kTraceTol &&
            r.min_eigenvalue >= -kPsdTol;
  return r;
}

BlochTwoQubit mcs_mis_mixture(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("mcs_mis_mixture: mixing weight must lie in [0,1]");
  BlochTwoQubit s;
  s.x = Vec3(p, 0, 0);
  s.y = Vec3(p, 0, 0);
  s.T(0, 0) = p;
  return s;
}

namespace {

void check_probs(const BellProbs& bp, const char* where) {
  const double sum = bp.p1 + bp.p2 + bp.p3 + bp.p4;
  const bool nonneg = bp.p1 >= -kProbTol && bp.p2 >= -kProbTol && bp.p3 >= -kProbTol &&
                      bp.p4 >= -kProbTol;
  if (!nonneg || std::abs(sum - 1.0) > kProbTol)
    throw std::invalid_argument(std::string(where) + ": invalid probability vector");
}

}  // namespace

BetaCoords beta_from_probs(const BellProbs& bp) {
  check_probs(bp, "beta_from_probs");
  constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  return BetaCoords{0.5 * (bp.p1 - bp.p2 - bp.p3 + bp.p4), (bp.p1 - bp.p4) * inv_sqrt2,
                    (bp.p2 - bp.p3) * inv_sqrt2};
}

BellProbs probs_from_beta(const BetaCoords& b) {
  constexpr double s2 = std::numbers::sqrt2;
  BellProbs bp;
  bp.p1 = 0.5 * (0.5 + b.beta1 + s2 * b.beta2);
  bp.p4 = 0.5 * (0.5 + b.beta1 - s2 * b.beta2);
  bp.p2 = 0.5 * (0.5 - b.beta1 + s2 * b.beta3);
  bp.p3 = 0.5 * (0.5 - b.beta1 - s2 * b.beta3);
  return bp;
}

bool in_tetrahedron(const BetaCoords& b) {
  const BellProbs bp = probs_from_beta(b);
  return bp.p1 >= -kProbTol && bp.p2 >= -kProbTol && bp.p3 >= -kProbTol &&
         bp.p4 >= -kProbTol;
}

BlochTwoQubit bds_to_bloch(const BetaCoords& b) {
  if (!in_tetrahedron(b))
    throw std::domain_error("bds_to_bloch: beta coordinates outside the tetrahedron");
  constexpr double s2 = std::numbers::sqrt2;
  BlochTwoQubit s;
  s.T(0, 0) = s2 * (b.beta2 - b.beta3);
  s.T(1, 1) = -2.0 * b.beta1;
  s.T(2, 2) = s2 * (b.beta2 + b.beta3);
  return s;
}

bool is_separable_bds(const BellProbs& bp) {
  check_probs(bp, "is_separable_bds");
  const double pmax = std::max(std::max(bp.p1, bp.p2), std::max(bp.p3, bp.p4));
  return pmax <= 0.5 + kProbTol;
}

Mat4c bell_basis() {
  constexpr double a = 1.0 / std::numbers::sqrt2;
  Mat4c u = Mat4c::Zero();
  u(0, 0) = a;
  u(3, 0) = a;  // |Phi+>
  u(0, 1) = a;
  u(3, 1) = -a;  // |Phi->
  u(1, 2) = a;
  u(2, 2) = a;  // |Psi+>
  u(1, 3) = a;
  u(2, 3) = -a;  // |Psi->
  return u;
}

Mat4c bell_projector(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("bell_projector index must be 0..3");
  const Mat4c u = bell_basis();
  return u.col(k) * u.col(k).adjoint();
}

MatXc sample_random_density(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatXc g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
  MatXc rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

BlochTwoQubit sample_random_state(std::mt19937_64& rng) {
  return density_to_bloch(sample_random_density(4, rng));
}

}  // namespace cohcast
