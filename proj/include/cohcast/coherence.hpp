#pragma once

#include "cohcast/states.hpp"

#include <optional>

namespace cohcast {

/// Measurement basis for coherence: the computational basis or the columns
/// of an explicit unitary.
class BasisSpec {
 public:
  static BasisSpec computational() { return BasisSpec{}; }
  /// Throws std::invalid_argument if u is not square or not unitary to 1e-12.
  static BasisSpec unitary(MatXc u);

  bool is_computational() const { return !u_.has_value(); }
  const MatXc& matrix() const { return *u_; }

 private:
  BasisSpec() = default;
  std::optional<MatXc> u_;
};

/// l1-norm coherence: sum of |<i|rho|j>| over i != j in the given basis.
double l1_coherence(const MatXc& rho);
double l1_coherence(const MatXc& rho, const BasisSpec& basis);

/// Bloch-parameter decomposition of the computational-basis l1 coherence of
/// a two-qubit state: total = (a1 + a2 + a3)/2, where (up to the factor 4)
/// a1 collects |<00|rho|11>| + |<01|rho|10>|, a2 the first-qubit coherences
/// |<00|rho|10>| + |<01|rho|11>|, and a3 the second-qubit coherences
/// |<00|rho|01>| + |<10|rho|11>|.  The b-terms are the same three sums
/// evaluated on a cloned output state.
struct CoherenceBreakdown {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
  double b1 = 0.0, b2 = 0.0, b3 = 0.0;
  double total = 0.0;  // (a1 + a2 + a3) / 2
};

CoherenceBreakdown closed_form_coherence(const BlochTwoQubit& s);
CoherenceBreakdown closed_form_coherence(const BlochTwoQubit& in, const BlochTwoQubit& out);

/// Path-shortening check for a point D strictly inside triangle ABC:
///   |AC|+|BC| > |AD|+|BD|, |AB|+|AC| > |BD|+|DC|, |BC|+|BA| > |DC|+|DA|.
/// Returns the conjunction (expected true for every valid input).  Throws
/// std::invalid_argument for a degenerate triangle (area <= 1e-12) or a
/// point D whose barycentric coordinates are not all > 1e-12.
bool triangle_path_inequality(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                              const Eigen::Vector2d& c, const Eigen::Vector2d& d);

}  // namespace cohcast
