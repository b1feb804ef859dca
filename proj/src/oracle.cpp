#include "cohcast/oracle.hpp"

#include "cohcast/coherence.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace cohcast {

double isometry_lambda_bound(int input_dim) { return 0.5 / (input_dim - 1); }

Isometry build_bh_isometry(int input_dim, double lambda) {
  if (input_dim != 2 && input_dim != 4)
    throw std::invalid_argument("build_bh_isometry: input dimension must be 2 or 4");
  const double bound = isometry_lambda_bound(input_dim);
  if (!(lambda >= 0.0 && lambda <= bound + 1e-15))
    throw IsometryRangeError("build_bh_isometry: lambda outside the constructible range");

  const int m = input_dim;
  Isometry v;
  v.input_dim = m;
  v.lambda = lambda;
  v.d = std::sqrt(lambda);
  v.c = std::sqrt(std::max(0.0, 1.0 - 2.0 * (m - 1) * lambda));
  v.matrix = MatXc::Zero(static_cast<Eigen::Index>(m) * m * m, m);
  auto row = [m](int a, int b, int mach) { return (a * m + b) * m + mach; };
  for (int i = 0; i < m; ++i) {
    v.matrix(row(i, i, i), i) = v.c;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      v.matrix(row(i, j, j), i) += v.d;
      v.matrix(row(j, i, j), i) += v.d;
    }
  }
  return v;
}

MultiDensity partial_trace(const MultiDensity& in, const std::vector<int>& keep) {
  const int n = static_cast<int>(in.dims.size());
  Eigen::Index total = 1;
  for (int d : in.dims) total *= d;
  if (in.rho.rows() != total || in.rho.cols() != total)
    throw std::invalid_argument("partial_trace: matrix size does not match factor dims");
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < 0 || keep[k] >= n)
      throw std::invalid_argument("partial_trace: keep index out of range");
    if (k > 0 && keep[k] <= keep[k - 1])
      throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
  }

  std::vector<int> traced;
  for (int f = 0; f < n; ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

  // Row-major strides over the full index space.
  std::vector<Eigen::Index> stride(n, 1);
  for (int f = n - 2; f >= 0; --f) stride[f] = stride[f + 1] * in.dims[f + 1];

  MultiDensity out;
  Eigen::Index kept_total = 1;
  for (int f : keep) {
    out.dims.push_back(in.dims[f]);
    kept_total *= in.dims[f];
  }
  Eigen::Index traced_total = 1;
  for (int f : traced) traced_total *= in.dims[f];

  // Base offsets of each kept / traced multi-index.
  auto offsets = [&](const std::vector<int>& factors, Eigen::Index count) {
    std::vector<Eigen::Index> off(count, 0);
    for (Eigen::Index idx = 0; idx < count; ++idx) {
      Eigen::Index rem = idx, o = 0;
      for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
        const int dim = in.dims[factors[f]];
        o += (rem % dim) * stride[factors[f]];
        rem /= dim;
      }
      off[idx] = o;
    }
    return off;
  };
  const std::vector<Eigen::Index> kept_off = offsets(keep, kept_total);
  const std::vector<Eigen::Index> traced_off = offsets(traced, traced_total);

  out.rho = MatXc::Zero(kept_total, kept_total);
  for (Eigen::Index i = 0; i < kept_total; ++i)
    for (Eigen::Index j = 0; j < kept_total; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < traced_total; ++t)
        sum += in.rho(kept_off[i] + traced_off[t], kept_off[j] + traced_off[t]);
      out.rho(i, j) = sum;
    }
  return out;
}

OracleOutputs oracle_clone(const BlochTwoQubit& s, CloneMode mode, double lambda) {
  const Mat4c rho_in = bloch_to_density(s);
  OracleOutputs out;
  if (mode == CloneMode::nonlocal) {
    const Isometry v = build_bh_isometry(4, lambda);
    MultiDensity joint;
    joint.dims = {2, 2, 2, 2, 4};  // qubits 1..4, machine
    joint.rho = v.matrix * rho_in * v.matrix.adjoint();
    out.rho12 = partial_trace(joint, {0, 1}).rho;
    out.rho34 = partial_trace(joint, {2, 3}).rho;
    out.rho13 = partial_trace(joint, {0, 2}).rho;
    out.rho24 = partial_trace(joint, {1, 3}).rho;
  } else {
    const Isometry v = build_bh_isometry(2, lambda);
    const MatXc w = Eigen::kroneckerProduct(v.matrix, v.matrix).eval();
    MultiDensity joint;
    joint.dims = {2, 2, 2, 2, 2, 2};  // (1, 3, mA, 2, 4, mB)
    joint.rho = w * rho_in * w.adjoint();
    out.rho12 = partial_trace(joint, {0, 3}).rho;
    out.rho34 = partial_trace(joint, {1, 4}).rho;
    out.rho13 = partial_trace(joint, {0, 1}).rho;
    out.rho24 = partial_trace(joint, {3, 4}).rho;
  }
  return out;
}

ComparisonReport compare_with_closed_form(const BlochTwoQubit& s, CloneMode mode,
                                          double lambda) {
  const OracleOutputs oracle = oracle_clone(s, mode, lambda);
  const CloneOutputs closed = clone_state(s, MachineParam::make(mode, lambda));

  ComparisonReport r;
  r.mode = mode;
  r.lambda = lambda;
  auto compare = [](const Mat4c& a, const BlochTwoQubit& b, double& dev, double& coh_dev) {
    const Mat4c bm = bloch_to_density(b);
    dev = (a - bm).cwiseAbs().maxCoeff();
    coh_dev = std::abs(l1_coherence(a) - l1_coherence(bm));
  };
  compare(oracle.rho12, closed.rho12, r.dev12, r.coh_dev12);
  compare(oracle.rho34, closed.rho34, r.dev34, r.coh_dev34);
  compare(oracle.rho13, closed.rho13, r.dev13, r.coh_dev13);
  compare(oracle.rho24, closed.rho24, r.dev24, r.coh_dev24);
  r.max_entry_deviation = std::max({r.dev12, r.dev34, r.dev13, r.dev24});
  r.max_coherence_deviation =
      std::max({r.coh_dev12, r.coh_dev34, r.coh_dev13, r.coh_dev24});
  return r;
}

}  // namespace cohcast
