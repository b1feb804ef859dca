#include "cohcast/broadcast.hpp"

#include "cohcast/coherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cohcast {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

BroadcastVerdict verdict(const BlochTwoQubit& s, const MachineParam& m) {
  const CloneOutputs out = clone_state(s, m);
  BroadcastVerdict v;
  v.coh_in = l1_coherence(bloch_to_density(s));
  v.coh_12 = l1_coherence(bloch_to_density(out.rho12));
  v.coh_34 = l1_coherence(bloch_to_density(out.rho34));
  v.coh_13 = l1_coherence(bloch_to_density(out.rho13));
  v.coh_24 = l1_coherence(bloch_to_density(out.rho24));
  const bool cross_coherent =
      v.coh_12 > kCoherenceZeroTol && v.coh_34 > kCoherenceZeroTol;
  const bool same_incoherent =
      v.coh_13 <= kCoherenceZeroTol && v.coh_24 <= kCoherenceZeroTol;
  v.optimal = cross_coherent && same_incoherent;
  v.nonoptimal = v.coh_12 > v.coh_13 && v.coh_12 > v.coh_24 && v.coh_34 > v.coh_13 &&
                 v.coh_34 > v.coh_24;
  v.gained = v.coh_12 > v.coh_in;
  return v;
}

bool mcs_condition(CloneMode mode, double p, double lambda) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("mcs_condition: mixing weight must lie in [0,1]");
  MachineParam::make(mode, lambda);  // range check
  if (mode == CloneMode::local) {
    const double mu = 1.0 - 2.0 * lambda;
    return p * mu * mu > 2.0 * lambda;
  }
  return p > 2.0 * lambda + 4.0 * p * lambda;
}

BdsCoherences bds_table_coherences(CloneMode mode, double lambda, const BetaCoords& b) {
  MachineParam::make(mode, lambda);
  constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  BdsCoherences c;
  c.c13 = 2.0 * lambda;
  if (mode == CloneMode::local) {
    const double mu = 1.0 - 2.0 * lambda;
    c.c12 = std::abs((2.0 * b.beta2 - b.beta3) * mu * mu) * inv_sqrt2;
  } else {
    c.c12 = (std::abs((2.0 * b.beta2 - b.beta3) * (4.0 * lambda - 1.0)) +
             std::abs(b.beta3 - 4.0 * b.beta3 * lambda)) *
            inv_sqrt2;
  }
  return c;
}

BdsCoherences bds_matrix_coherences(CloneMode mode, double lambda, const BetaCoords& b) {
  const CloneOutputs out = clone_state(bds_to_bloch(b), MachineParam::make(mode, lambda));
  BdsCoherences c;
  c.c12 = l1_coherence(bloch_to_density(out.rho12));
  c.c13 = l1_coherence(bloch_to_density(out.rho13));
  return c;
}

bool bds_condition(CloneMode mode, const BetaCoords& b) {
  if (!in_tetrahedron(b))
    throw std::domain_error("bds_condition: beta coordinates outside the tetrahedron");
  const MachineParam m = si_machine(mode);
  const BdsCoherences c = bds_table_coherences(mode, m.lambda, b);
  return c.c12 > c.c13;
}

Beta2Range beta2_ranges(CloneMode mode, double beta1, double beta3) {
  constexpr double s2 = std::numbers::sqrt2;
  Beta2Range r;
  r.beta1 = beta1;
  r.beta3 = beta3;

  const double slice = (0.5 + beta1) / s2;          // |beta2| bound
  const double beta3_bound = (0.5 - beta1) / s2;    // fixed-coordinate bound
  if (slice < -kProbTol || std::abs(beta3) > beta3_bound + kProbTol)
    return r;  // empty tetrahedron slice
  const double b = std::max(slice, 0.0);

  // Condition |2*beta2 - beta3| > root_gap, from the tabulated coherences at
  // the state-independent machine.
  const double root_gap = mode == CloneMode::local
                              ? 3.0 * s2 / 4.0
                              : s2 / 3.0 - std::abs(beta3);
  if (root_gap <= 0.0) {
    r.intervals.push_back({-b, b, false, false});
    return r;
  }
  const double lo_root = 0.5 * (beta3 - root_gap);
  const double hi_root = 0.5 * (beta3 + root_gap);
  if (lo_root > b) {
    r.intervals.push_back({-b, b, false, false});
  } else if (lo_root > -b) {
    r.intervals.push_back({-b, lo_root, false, true});
  }
  if (hi_root < -b) {
    r.intervals.push_back({-b, b, false, false});
  } else if (hi_root < b) {
    r.intervals.push_back({hi_root, b, true, false});
  }
  return r;
}

RegionSummary region_grid(CloneMode mode, double resolution,
                          const std::function<void(const RegionRecord&)>& sink) {
  if (!(resolution > 0.0 && resolution <= 0.1))
    throw std::domain_error("region_grid: resolution must lie in (0, 0.1]");
  const MachineParam m = si_machine(mode);
  const int k_max = static_cast<int>(std::floor(1.0 / std::numbers::sqrt2 / resolution + 1e-9));

  RegionSummary sum;
  sum.coherence_min = kNan;
  sum.coherence_max = kNan;

  // First pass: hue normalization bounds over broadcastable points.
  for (int i = -k_max; i <= k_max; ++i)
    for (int j = -k_max; j <= k_max; ++j)
      for (int k = -k_max; k <= k_max; ++k) {
        const BetaCoords b{i * resolution, j * resolution, k * resolution};
        if (!in_tetrahedron(b)) continue;
        const BdsCoherences c = bds_table_coherences(mode, m.lambda, b);
        if (c.c12 > c.c13) {
          // NaN-aware: the first broadcastable point seeds both bounds.
          if (!(sum.coherence_min <= c.c12)) sum.coherence_min = c.c12;
          if (!(sum.coherence_max >= c.c12)) sum.coherence_max = c.c12;
        }
      }
  const double span = sum.coherence_max - sum.coherence_min;

  for (int i = -k_max; i <= k_max; ++i)
    for (int j = -k_max; j <= k_max; ++j)
      for (int k = -k_max; k <= k_max; ++k) {
        RegionRecord rec;
        rec.beta1 = i * resolution;
        rec.beta2 = j * resolution;
        rec.beta3 = k * resolution;
        ++sum.total_points;
        const BetaCoords b{rec.beta1, rec.beta2, rec.beta3};
        rec.in_tetrahedron = in_tetrahedron(b);
        if (!rec.in_tetrahedron) {
          rec.nonlocal_coherence = kNan;
          rec.hue = kNan;
          if (sink) sink(rec);
          continue;
        }
        ++sum.tetrahedron_points;
        const BdsCoherences c = bds_table_coherences(mode, m.lambda, b);
        rec.nonlocal_coherence = c.c12;
        rec.broadcastable = c.c12 > c.c13;
        if (rec.broadcastable) {
          ++sum.broadcastable_points;
          rec.hue = span > 0.0 ? (c.c12 - sum.coherence_min) / span : 0.0;
        } else {
          rec.hue = kNan;
        }
        if (sink) sink(rec);
      }
  return sum;
}

NoGainReport verify_no_gain(int samples, CloneMode mode, std::uint64_t seed) {
  if (samples < 1) throw std::domain_error("verify_no_gain: sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  NoGainReport rep;
  rep.mode = mode;
  for (int n = 0; n <= samples; ++n) {
    // Probe 0 is the maximally mixed (genuinely incoherent) state.
    const BlochTwoQubit s = n == 0 ? BlochTwoQubit{} : sample_random_state(rng);
    // Local mode needs the open interval (0, 1/2) for a strict decrease.
    const double u = unit(rng);
    const double lambda = mode == CloneMode::local ? 0.5 * (0.001 + 0.998 * u) : 0.25 * u;
    const MachineParam m = MachineParam::make(mode, lambda);
    const double coh_in = l1_coherence(bloch_to_density(s));
    const double coh_out =
        l1_coherence(bloch_to_density(clone_state(s, m).rho12));
    ++rep.samples;
    if (mode == CloneMode::nonlocal)
      rep.max_mu_deviation =
          std::max(rep.max_mu_deviation, std::abs(coh_out - m.mu * coh_in));
    if (coh_in <= 1e-9) {
      ++rep.incoherent_inputs;
      continue;
    }
    ++rep.coherent_samples;
    rep.max_ratio = std::max(rep.max_ratio, coh_out / coh_in);
    if (mode == CloneMode::local) {
      if (!(coh_out < coh_in)) rep.violation = true;
    } else {
      if (coh_out > coh_in + kCoherenceZeroTol) rep.violation = true;
      if (std::abs(coh_out - m.mu * coh_in) > kCoherenceZeroTol) rep.violation = true;
    }
  }
  return rep;
}

}  // namespace cohcast
