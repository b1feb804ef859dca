#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>

namespace cohcast {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using MatXc = Eigen::MatrixXcd;

// Tolerance ladder: 1e-14 for construction identities, 1e-12 for
// Hermiticity/trace residuals, 1e-10 of slack on the smallest eigenvalue.
inline constexpr double kConstructTol = 1e-14;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kProbTol = 1e-12;

/// Two-qubit mixed state in Bloch form: local vectors x, y and the 3x3
/// correlation matrix T, so that
///   rho = (1/4)[I(x)I + sum_i x_i s_i(x)I + sum_i y_i I(x)s_i
///               + sum_ij t_ij s_i(x)s_j].
/// Qubit 1 is the left tensor factor; basis order |00>,|01>,|10>,|11>.
struct BlochTwoQubit {
  Vec3 x = Vec3::Zero();
  Vec3 y = Vec3::Zero();
  Mat3 T = Mat3::Zero();
};

/// Pauli matrix s_i for i in {1,2,3} = {X, Y, Z}, with Y = [[0,-i],[i,0]].
const Mat2c& pauli(int i);

struct ValidityReport {
  double hermiticity_residual = 0.0;  // max |rho - rho^dagger| entry
  double trace_residual = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;        // of the Hermitian part
  bool valid = false;
};

/// Mixing probabilities of the four Bell projectors
/// (p1, p2, p3, p4) <-> (|Phi+>, |Psi+>, |Phi->, |Psi->).
struct BellProbs {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
};

/// Bell-diagonal state in beta coordinates; beta0 is the constant 1/2.
struct BetaCoords {
  double beta1 = 0.0, beta2 = 0.0, beta3 = 0.0;
};

Mat4c bloch_to_density(const BlochTwoQubit& s);

/// Inverse of bloch_to_density via Pauli-trace projections.  Throws
/// std::invalid_argument if rho is not 4x4 or the extracted parameters
/// carry imaginary parts above 1e-10 (non-Hermitian input).
BlochTwoQubit density_to_bloch(const MatXc& rho);

/// Reports Hermiticity, trace and positivity residuals; never throws.
ValidityReport validate_state(const MatXc& rho);

/// p * |MCS><MCS| + (1-p) * I/4 in Bloch form, |MCS> the uniform two-qubit
/// superposition.  Throws std::domain_error for p outside [0,1].
BlochTwoQubit mcs_mis_mixture(double p);

/// beta1 = (p1-p2-p3+p4)/2, beta2 = (p1-p4)/sqrt2, beta3 = (p2-p3)/sqrt2.
/// Throws std::invalid_argument for an invalid probability vector.
BetaCoords beta_from_probs(const BellProbs& bp);

/// Analytic inverse of beta_from_probs.  Never throws; the returned values
/// may be negative so that callers can test tetrahedron membership.
BellProbs probs_from_beta(const BetaCoords& b);

/// True iff all four inverse probabilities are >= -1e-12.
bool in_tetrahedron(const BetaCoords& b);

/// Bell-diagonal state as x = y = 0 and
/// T = diag[sqrt2(beta2-beta3), -2 beta1, sqrt2(beta2+beta3)].
/// Throws std::domain_error outside the tetrahedron.
/// Under this sign convention the vertices map onto the Bell projectors as
/// p1 -> |Phi+>, p2 -> |Phi->, p3 -> |Psi+>, p4 -> |Psi->.
BlochTwoQubit bds_to_bloch(const BetaCoords& b);

/// True iff max(p1,p2,p3,p4) <= 1/2 (boundary included).
bool is_separable_bds(const BellProbs& bp);

/// Columns |Phi+>, |Phi->, |Psi+>, |Psi-> in the computational basis.
Mat4c bell_basis();

/// Projector onto Bell state k, in the column order of bell_basis().
Mat4c bell_projector(int k);

/// Random density matrix GG^dagger / tr, G complex Gaussian (Ginibre).
MatXc sample_random_density(int dim, std::mt19937_64& rng);

/// Random valid two-qubit state in Bloch form.
BlochTwoQubit sample_random_state(std::mt19937_64& rng);

}  // namespace cohcast
