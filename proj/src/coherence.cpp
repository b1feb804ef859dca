#include "cohcast/coherence.hpp"

#include <cmath>
#include <stdexcept>

namespace cohcast {

BasisSpec BasisSpec::unitary(MatXc u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("basis matrix must be square");
  const double dev =
      (u.adjoint() * u - MatXc::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-12) throw std::invalid_argument("basis matrix is not unitary");
  BasisSpec b;
  b.u_ = std::move(u);
  return b;
}

double l1_coherence(const MatXc& rho) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

double l1_coherence(const MatXc& rho, const BasisSpec& basis) {
  if (basis.is_computational()) return l1_coherence(rho);
  const MatXc& u = basis.matrix();
  if (u.rows() != rho.rows())
    throw std::invalid_argument("basis dimension does not match the state");
  return l1_coherence(MatXc(u.adjoint() * rho * u));
}

namespace {

// The three pair sums of off-diagonal magnitudes, in Bloch parameters.
double term_corr(const BlochTwoQubit& s) {
  return std::hypot(s.T(0, 1) + s.T(1, 0), s.T(0, 0) - s.T(1, 1)) +
         std::hypot(s.T(0, 1) - s.T(1, 0), s.T(0, 0) + s.T(1, 1));
}

double term_x(const BlochTwoQubit& s) {
  return std::hypot(s.T(0, 2) - s.x[0], s.T(1, 2) - s.x[1]) +
         std::hypot(s.T(0, 2) + s.x[0], s.T(1, 2) + s.x[1]);
}

double term_y(const BlochTwoQubit& s) {
  return std::hypot(s.T(2, 0) - s.y[0], s.T(2, 1) - s.y[1]) +
         std::hypot(s.T(2, 0) + s.y[0], s.T(2, 1) + s.y[1]);
}

}  // namespace

CoherenceBreakdown closed_form_coherence(const BlochTwoQubit& s) {
  CoherenceBreakdown r;
  r.a1 = term_corr(s);
  r.a2 = term_x(s);
  r.a3 = term_y(s);
  r.total = 0.5 * (r.a1 + r.a2 + r.a3);
  return r;
}

CoherenceBreakdown closed_form_coherence(const BlochTwoQubit& in,
                                         const BlochTwoQubit& out) {
  CoherenceBreakdown r = closed_form_coherence(in);
  r.b1 = term_corr(out);
  r.b2 = term_x(out);
  r.b3 = term_y(out);
  return r;
}

namespace {

double cross2(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return u.x() * v.y() - u.y() * v.x();
}

}  // namespace

bool triangle_path_inequality(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                              const Eigen::Vector2d& c, const Eigen::Vector2d& d) {
  const double twice_area = cross2(b - a, c - a);
  if (std::abs(twice_area) * 0.5 <= 1e-12)
    throw std::invalid_argument("triangle_path_inequality: degenerate triangle");
  // Barycentric coordinates of d.
  const double wa = cross2(b - d, c - d) / twice_area;
  const double wb = cross2(c - d, a - d) / twice_area;
  const double wc = cross2(a - d, b - d) / twice_area;
  if (!(wa > 1e-12 && wb > 1e-12 && wc > 1e-12))
    throw std::invalid_argument("triangle_path_inequality: point not strictly interior");

  const double ab = (a - b).norm();
  const double ac = (a - c).norm();
  const double bc = (b - c).norm();
  const double ad = (a - d).norm();
  const double bd = (b - d).norm();
  const double cd = (c - d).norm();
  return (ac + bc > ad + bd) && (ab + ac > bd + cd) && (bc + ab > cd + ad);
}

}  // namespace cohcast
