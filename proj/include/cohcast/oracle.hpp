#pragma once

#include "cohcast/cloning.hpp"
#include "cohcast/states.hpp"

#include <stdexcept>
#include <vector>

namespace cohcast {

/// Thrown when the machine parameter lies beyond the range for which the
/// copying isometry exists (c^2 = 1 - 2(M-1)*lambda would go negative).
/// Distinct from the closed-form layer's own range checks.
class IsometryRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest lambda for which the M-dimensional isometry exists: 1/(2(M-1)).
double isometry_lambda_bound(int input_dim);

/// Copying isometry V: C^M -> C^M (x) C^M (x) C^M mapping basis state |i> to
///   c |i,i,m_i> + d * sum_{j != i} (|i,j> + |j,i>) |m_j>,
/// with c^2 = 1 - 2(M-1)*lambda, d^2 = lambda and {m_j} an orthonormal
/// machine basis.  Output factors are ordered (copy 1, copy 2, machine).
/// The blank and machine registers are absorbed into the map, so the
/// outputs cannot depend on a blank-state choice by construction.
struct Isometry {
  int input_dim = 0;  // M
  double lambda = 0.0;
  double c = 0.0, d = 0.0;
  MatXc matrix;  // (M^3) x M, columns orthonormal
};

/// Throws std::invalid_argument unless M is 2 or 4, IsometryRangeError when
/// lambda is outside [0, 1/(2(M-1))].
Isometry build_bh_isometry(int input_dim, double lambda);

/// Density matrix over an ordered list of tensor factors.
struct MultiDensity {
  std::vector<int> dims;
  MatXc rho;
};

/// Reduces to the kept factors (indices strictly increasing), preserving
/// their order.  Throws std::invalid_argument on invalid index sets.
MultiDensity partial_trace(const MultiDensity& in, const std::vector<int>& keep);

/// The four pairwise reductions of the post-cloning joint state, computed by
/// explicit isometry application and partial traces.
///
/// Non-local mode: one M=4 isometry on the qubit pair (1,2); the output
/// factors (copy 1, copy 2, machine) are reinterpreted as qubits
/// (1,2), (3,4) and a 4-dimensional machine.  Local mode: independent M=2
/// isometries on qubit 1 (factors 1,3,machine A) and qubit 2 (factors
/// 2,4,machine B); the joint factor order is (1,3,mA,2,4,mB) and the
/// reductions pick index sets accordingly.
struct OracleOutputs {
  Mat4c rho12, rho34, rho13, rho24;
};

OracleOutputs oracle_clone(const BlochTwoQubit& s, CloneMode mode, double lambda);

/// Entrywise and coherence deviations between the oracle reductions and the
/// closed-form cloning maps, for all four output pairs.
struct ComparisonReport {
  CloneMode mode = CloneMode::local;
  double lambda = 0.0;
  double dev12 = 0.0, dev34 = 0.0, dev13 = 0.0, dev24 = 0.0;
  double max_entry_deviation = 0.0;
  double coh_dev12 = 0.0, coh_dev34 = 0.0, coh_dev13 = 0.0, coh_dev24 = 0.0;
  double max_coherence_deviation = 0.0;
};

ComparisonReport compare_with_closed_form(const BlochTwoQubit& s, CloneMode mode,
                                          double lambda);

}  // namespace cohcast
