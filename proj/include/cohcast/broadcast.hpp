#pragma once

#include "cohcast/cloning.hpp"
#include "cohcast/states.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace cohcast {

/// Coherence below this counts as zero when evaluating the predicates.
inline constexpr double kCoherenceZeroTol = 1e-12;

/// Output coherences of a cloning run plus the two broadcasting predicates.
/// optimal: cross-lab pairs coherent while both same-lab pairs are incoherent.
/// nonoptimal: both cross-lab coherences strictly exceed both same-lab ones.
struct BroadcastVerdict {
  double coh_in = 0.0;
  double coh_12 = 0.0, coh_34 = 0.0;
  double coh_13 = 0.0, coh_24 = 0.0;
  bool optimal = false;
  bool nonoptimal = false;
  bool gained = false;  // coh_12 > coh_in
};

BroadcastVerdict verdict(const BlochTwoQubit& s, const MachineParam& m);

/// Broadcasting condition for the MCS/MIS mixture family:
/// p(1-2l)^2 > 2l (local), p > 2l + 4pl (nonlocal).
bool mcs_condition(CloneMode mode, double p, double lambda);

/// Cross-lab (c12) and same-lab (c13) output coherences for the
/// Bell-diagonal family.
struct BdsCoherences {
  double c12 = 0.0;
  double c13 = 0.0;
};

/// The tabulated closed forms the range tables are built from:
/// local  c12 = |(2b2-b3)(1-2l)^2| / sqrt2,
/// nonlocal c12 = [|(2b2-b3)(4l-1)| + |b3 - 4 b3 l|] / sqrt2, c13 = 2l.
BdsCoherences bds_table_coherences(CloneMode mode, double lambda, const BetaCoords& b);

/// The same two coherences computed from the cloned density matrices.
/// Disagrees with the tabulated c12 whenever beta1 != 0 (different
/// diagonal-index convention); the crosscheck command exposes both.
BdsCoherences bds_matrix_coherences(CloneMode mode, double lambda, const BetaCoords& b);

/// True iff the tabulated c12 exceeds c13 at the state-independent machine.
/// Throws std::domain_error outside the tetrahedron.
bool bds_condition(CloneMode mode, const BetaCoords& b);

struct Beta2Interval {
  double lo = 0.0, hi = 0.0;
  bool lo_open = false, hi_open = false;
};

/// Solution of the broadcasting condition in beta2 for fixed (beta1, beta3),
/// intersected with the tetrahedron slice [-(1/2+b1)/sqrt2, (1/2+b1)/sqrt2].
/// Condition roots are open endpoints, slice bounds closed.  An empty slice
/// yields an empty interval list.
struct Beta2Range {
  double beta1 = 0.0, beta3 = 0.0;
  std::vector<Beta2Interval> intervals;  // disjoint, sorted, at most two
};

Beta2Range beta2_ranges(CloneMode mode, double beta1, double beta3);

/// One point of the tetrahedron sweep.  Fields outside their domain
/// (coherence outside the tetrahedron, hue off the broadcast region) are NaN.
struct RegionRecord {
  double beta1 = 0.0, beta2 = 0.0, beta3 = 0.0;
  bool in_tetrahedron = false;
  bool broadcastable = false;
  double nonlocal_coherence = 0.0;  // cross-lab c12, tabulated closed form
  double hue = 0.0;                 // c12 min-max normalized over the grid
};

struct RegionSummary {
  long total_points = 0;
  long tetrahedron_points = 0;
  long broadcastable_points = 0;
  double coherence_min = 0.0;  // over broadcastable points (NaN if none)
  double coherence_max = 0.0;
};

/// Sweeps the symmetric grid {k*resolution} within [-1/sqrt2, 1/sqrt2]^3 at
/// the state-independent machine of the given mode, emitting records in
/// lexicographic (beta1, beta2, beta3) order.  resolution must lie in
/// (0, 0.1].  Hue normalization bounds are computed from the same grid.
RegionSummary region_grid(CloneMode mode, double resolution,
                          const std::function<void(const RegionRecord&)>& sink);

/// Coherence-monotonicity sweep over random valid states and machine
/// parameters.  The first probe is the maximally mixed state; inputs with
/// coherence <= 1e-9 are excluded from the ratio statistics and counted
/// separately.
struct NoGainReport {
  CloneMode mode = CloneMode::local;
  int samples = 0;
  int coherent_samples = 0;
  int incoherent_inputs = 0;
  double max_ratio = 0.0;         // max C(rho12_out) / C(rho_in)
  double max_mu_deviation = 0.0;  // nonlocal: max |C_out - mu * C_in|
  bool violation = false;
};

NoGainReport verify_no_gain(int samples, CloneMode mode, std::uint64_t seed);

}  // namespace cohcast
