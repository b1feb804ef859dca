#include "cohcast/cloning.hpp"

#include <stdexcept>

namespace cohcast {

const char* to_string(CloneMode mode) {
  return mode == CloneMode::local ? "local" : "nonlocal";
}

double lambda_upper_bound(CloneMode mode) {
  return mode == CloneMode::local ? 0.5 : 0.25;
}

MachineParam MachineParam::make(CloneMode mode, double lambda) {
  const double hi = lambda_upper_bound(mode);
  if (!(lambda >= 0.0 && lambda <= hi))
    throw std::domain_error(std::string("machine parameter out of range for ") +
                            to_string(mode) + " cloning");
  MachineParam m;
  m.mode = mode;
  m.lambda = lambda;
  m.mu = mode == CloneMode::local ? 1.0 - 2.0 * lambda : 1.0 - 4.0 * lambda;
  return m;
}

MachineParam si_machine(CloneMode mode) {
  return MachineParam::make(mode, mode == CloneMode::local ? 1.0 / 6.0 : 1.0 / 10.0);
}

Mat3 output_correlation(const MachineParam& m) {
  Mat3 t = Mat3::Zero();
  t(0, 0) = 2.0 * m.lambda;
  t(1, 1) = 2.0 * m.lambda;
  t(2, 2) = m.mode == CloneMode::local ? 1.0 - 4.0 * m.lambda : 1.0 - 8.0 * m.lambda;
  return t;
}

namespace {

void require_mode(const MachineParam& m, CloneMode mode, const char* where) {
  if (m.mode != mode)
    throw std::invalid_argument(std::string(where) + ": machine mode mismatch");
}

}  // namespace

CloneOutputs clone_local(const BlochTwoQubit& s, const MachineParam& m) {
  require_mode(m, CloneMode::local, "clone_local");
  CloneOutputs out;
  out.machine = m;
  out.rho12 = BlochTwoQubit{m.mu * s.x, m.mu * s.y, m.mu * m.mu * s.T};
  out.rho34 = out.rho12;
  const Mat3 tl = output_correlation(m);
  out.rho13 = BlochTwoQubit{m.mu * s.x, m.mu * s.x, tl};
  out.rho24 = BlochTwoQubit{m.mu * s.y, m.mu * s.y, tl};
  return out;
}

CloneOutputs clone_nonlocal(const BlochTwoQubit& s, const MachineParam& m) {
  require_mode(m, CloneMode::nonlocal, "clone_nonlocal");
  CloneOutputs out;
  out.machine = m;
  out.rho12 = BlochTwoQubit{m.mu * s.x, m.mu * s.y, m.mu * s.T};
  out.rho34 = out.rho12;
  const Mat3 tnl = output_correlation(m);
  out.rho13 = BlochTwoQubit{m.mu * s.x, m.mu * s.x, tnl};
  out.rho24 = BlochTwoQubit{m.mu * s.y, m.mu * s.y, tnl};
  return out;
}

CloneOutputs clone_state(const BlochTwoQubit& s, const MachineParam& m) {
  return m.mode == CloneMode::local ? clone_local(s, m) : clone_nonlocal(s, m);
}

}  // namespace cohcast
