#pragma once

#include "cohcast/states.hpp"

namespace cohcast {

enum class CloneMode { local, nonlocal };

const char* to_string(CloneMode mode);

/// Cloning machine setting: the machine parameter lambda and the derived
/// shrinking factor mu = 1-2*lambda (local) or 1-4*lambda (nonlocal).
struct MachineParam {
  CloneMode mode = CloneMode::local;
  double lambda = 0.0;
  double mu = 1.0;

  /// Range-checked: lambda in [0, 1/2] for local, [0, 1/4] for nonlocal.
  static MachineParam make(CloneMode mode, double lambda);
};

/// State-independent machine: lambda = 1/6 (local) or 1/10 (nonlocal).
MachineParam si_machine(CloneMode mode);

double lambda_upper_bound(CloneMode mode);

/// The four reduced outputs of the cloning maps, in Bloch form.
/// rho12/rho34 are the cross-lab pairs, rho13/rho24 the same-lab pairs.
struct CloneOutputs {
  BlochTwoQubit rho12, rho34;
  BlochTwoQubit rho13, rho24;
  MachineParam machine;
};

/// Same-lab output correlation matrix: diag(2l, 2l, 1-4l) local,
/// diag(2l, 2l, 1-8l) nonlocal.
Mat3 output_correlation(const MachineParam& m);

/// Local cloning map: rho12 = rho34 = {mu x, mu y, mu^2 T},
/// rho13 = {mu x, mu x, T_l}, rho24 = {mu y, mu y, T_l}.
CloneOutputs clone_local(const BlochTwoQubit& s, const MachineParam& m);

/// Non-local cloning map: rho12 = rho34 = {mu x, mu y, mu T},
/// rho13 = {mu x, mu x, T_nl}, rho24 = {mu y, mu y, T_nl}.
CloneOutputs clone_nonlocal(const BlochTwoQubit& s, const MachineParam& m);

CloneOutputs clone_state(const BlochTwoQubit& s, const MachineParam& m);

}  // namespace cohcast
