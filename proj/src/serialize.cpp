#include "cohcast/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cohcast {

namespace {

Json vec3_to_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("expected a 3-element array");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Json nan_to_null(double v) { return std::isnan(v) ? Json() : Json(v); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Json to_json(const BlochTwoQubit& s) {
  Json t = Json::array();
  for (int i = 0; i < 3; ++i)
    t.push_back(Json::array({s.T(i, 0), s.T(i, 1), s.T(i, 2)}));
  return Json{{"x", vec3_to_json(s.x)}, {"y", vec3_to_json(s.y)}, {"T", t}};
}

Json to_json(const BetaCoords& b) {
  return Json{{"beta", Json::array({b.beta1, b.beta2, b.beta3})}};
}

Json density_to_json(const MatXc& rho) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      row.push_back(Json::array({rho(i, j).real(), rho(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

MatXc density_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("density: expected a nested array");
  const auto n = static_cast<Eigen::Index>(j.size());
  MatXc rho(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw std::invalid_argument("density: ragged matrix");
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& cell = row[k];
      if (cell.is_number()) {
        rho(i, k) = Complex{cell.get<double>(), 0.0};
      } else if (cell.is_array() && cell.size() == 2) {
        rho(i, k) = Complex{cell[0].get<double>(), cell[1].get<double>()};
      } else {
        throw std::invalid_argument("density: entries must be numbers or [re, im]");
      }
    }
  }
  return rho;
}

LoadedState state_from_json(const Json& j) {
  LoadedState st;
  if (j.is_array() || (j.is_object() && j.contains("density"))) {
    const MatXc rho = density_from_json(j.is_array() ? j : j.at("density"));
    if (rho.rows() != 4)
      throw std::invalid_argument("state file: density matrix must be 4x4");
    st.density = rho;
    st.bloch = density_to_bloch(rho);
    st.from_density = true;
    return st;
  }
  if (!j.is_object()) throw std::invalid_argument("state file: expected an object");
  if (j.contains("beta") || j.contains("beta1")) {
    BetaCoords b;
    if (j.contains("beta")) {
      const Json& arr = j.at("beta");
      if (!arr.is_array() || arr.size() != 3)
        throw std::invalid_argument("state file: beta must be a 3-element array");
      b = BetaCoords{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
    } else {
      b = BetaCoords{j.at("beta1").get<double>(), j.at("beta2").get<double>(),
                     j.at("beta3").get<double>()};
    }
    st.bloch = bds_to_bloch(b);
    st.density = bloch_to_density(st.bloch);
    return st;
  }
  if (j.contains("x") && j.contains("y") && j.contains("T")) {
    BlochTwoQubit s;
    s.x = vec3_from_json(j.at("x"));
    s.y = vec3_from_json(j.at("y"));
    const Json& t = j.at("T");
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("state file: T must be a 3x3 array");
    for (int i = 0; i < 3; ++i) {
      const Vec3 row = vec3_from_json(t[i]);
      for (int k = 0; k < 3; ++k) s.T(i, k) = row[k];
    }
    st.bloch = s;
    st.density = bloch_to_density(s);
    return st;
  }
  throw std::invalid_argument("state file: expected x/y/T, beta, or a density matrix");
}

Json to_json(const ValidityReport& r) {
  return Json{{"hermiticity_residual", r.hermiticity_residual},
              {"trace_residual", r.trace_residual},
              {"min_eigenvalue", r.min_eigenvalue},
              {"valid", r.valid}};
}

Json to_json(const CoherenceBreakdown& b) {
  return Json{{"a1", b.a1}, {"a2", b.a2}, {"a3", b.a3},
              {"b1", b.b1}, {"b2", b.b2}, {"b3", b.b3}, {"total", b.total}};
}

Json to_json(const BroadcastVerdict& v) {
  return Json{{"coh_in", v.coh_in},     {"coh_12", v.coh_12},
              {"coh_34", v.coh_34},     {"coh_13", v.coh_13},
              {"coh_24", v.coh_24},     {"optimal", v.optimal},
              {"nonoptimal", v.nonoptimal}, {"gained", v.gained}};
}

Json to_json(const MachineParam& m) {
  return Json{{"mode", to_string(m.mode)}, {"lambda", m.lambda}, {"mu", m.mu}};
}

Json to_json(const CloneOutputs& out) {
  return Json{{"machine", to_json(out.machine)},
              {"rho12", to_json(out.rho12)},
              {"rho34", to_json(out.rho34)},
              {"rho13", to_json(out.rho13)},
              {"rho24", to_json(out.rho24)}};
}

Json to_json(const Beta2Interval& iv) {
  return Json{{"lo", iv.lo}, {"hi", iv.hi}, {"lo_open", iv.lo_open}, {"hi_open", iv.hi_open}};
}

Json to_json(const Beta2Range& r) {
  Json ivs = Json::array();
  for (const auto& iv : r.intervals) ivs.push_back(to_json(iv));
  return Json{{"beta1", r.beta1}, {"beta3", r.beta3}, {"intervals", ivs}};
}

Json to_json(const ComparisonReport& r) {
  return Json{{"mode", to_string(r.mode)},
              {"lambda", r.lambda},
              {"dev12", r.dev12},
              {"dev34", r.dev34},
              {"dev13", r.dev13},
              {"dev24", r.dev24},
              {"max_entry_deviation", r.max_entry_deviation},
              {"coh_dev12", r.coh_dev12},
              {"coh_dev34", r.coh_dev34},
              {"coh_dev13", r.coh_dev13},
              {"coh_dev24", r.coh_dev24},
              {"max_coherence_deviation", r.max_coherence_deviation}};
}

Json to_json(const NoGainReport& r) {
  return Json{{"mode", to_string(r.mode)},
              {"samples", r.samples},
              {"coherent_samples", r.coherent_samples},
              {"incoherent_inputs", r.incoherent_inputs},
              {"max_ratio", r.max_ratio},
              {"max_mu_deviation", r.max_mu_deviation},
              {"violation", r.violation}};
}

Json to_json(const RegionRecord& rec) {
  return Json{{"beta1", rec.beta1},
              {"beta2", rec.beta2},
              {"beta3", rec.beta3},
              {"in_tetrahedron", rec.in_tetrahedron},
              {"broadcastable", rec.broadcastable},
              {"nonlocal_coherence", nan_to_null(rec.nonlocal_coherence)},
              {"hue", nan_to_null(rec.hue)}};
}

Json to_json(const RegionSummary& s) {
  return Json{{"total_points", s.total_points},
              {"tetrahedron_points", s.tetrahedron_points},
              {"broadcastable_points", s.broadcastable_points},
              {"coherence_min", nan_to_null(s.coherence_min)},
              {"coherence_max", nan_to_null(s.coherence_max)}};
}

std::string region_csv_header() {
  return "beta1,beta2,beta3,in_tetrahedron,broadcastable,nonlocal_coherence,hue";
}

std::string region_csv_row(const RegionRecord& rec) {
  std::string row = fmt(rec.beta1);
  row += ',';
  row += fmt(rec.beta2);
  row += ',';
  row += fmt(rec.beta3);
  row += rec.in_tetrahedron ? ",1" : ",0";
  row += rec.broadcastable ? ",1" : ",0";
  row += ',';
  row += fmt(rec.nonlocal_coherence);
  row += ',';
  row += fmt(rec.hue);
  return row;
}

std::string format_interval(const Beta2Interval& iv) {
  // Half-away-from-zero at 3 decimals, matching the table comparison.
  const auto r3 = [](double v) { return std::llround(v * 1000.0) / 1000.0; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%c%.3f, %.3f%c", iv.lo_open ? '(' : '[', r3(iv.lo),
                r3(iv.hi), iv.hi_open ? ')' : ']');
  return buf;
}

}  // namespace cohcast
