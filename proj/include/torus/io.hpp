#pragma once

// Text encodings for tables, reports and decompositions.
//
// JSON uses insertion-ordered objects and floats pre-rounded to a fixed
// number of significant digits, so identical inputs give identical bytes.

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "torus/certifier.hpp"
#include "torus/nodal_lab.hpp"
#include "torus/special_functions.hpp"
#include "torus/spectrum.hpp"

namespace torus::io {

using Json = nlohmann::ordered_json;

/// `value` rounded to `digits` significant digits.
inline double round_significant(double value, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

inline std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

inline std::string significant(double value, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

inline Json constants_json() {
  return Json{{"j01", round_significant(special::j01().value)},
              {"pi_j01_sq", round_significant(special::faber_krahn_constant())},
              {"ratio_bound", round_significant(special::ratio_bound())}};
}

/// {command, parameters, results, constants}.
inline Json envelope(const std::string& command, Json parameters, Json results) {
  return Json{{"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"constants", constants_json()}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- spectrum --------------------------------------------------------------

inline std::string representatives_text(const EigenvalueClass& cls) {
  std::string out;
  for (const LatticeIndex& r : cls.representatives) {
    if (!out.empty()) out += ';';
    out += std::to_string(r.m) + "," + std::to_string(r.n);
  }
  return out;
}

/// Header `s,representatives,multiplicity,cumulative`; the representatives
/// field is always quoted because it contains commas.
inline std::string spectrum_csv(const SpectrumTable& table) {
  std::string out = "s,representatives,multiplicity,cumulative\n";
  for (const EigenvalueClass& cls : table.classes()) {
    out += std::to_string(cls.s) + ",\"" + representatives_text(cls) + "\"," + std::to_string(cls.multiplicity) +
           "," + std::to_string(cls.last_index) + "\n";
  }
  return out;
}

inline Json spectrum_json(const SpectrumTable& table) {
  Json classes = Json::array();
  for (const EigenvalueClass& cls : table.classes()) {
    Json reps = Json::array();
    for (const LatticeIndex& r : cls.representatives) reps.push_back(Json::array({r.m, r.n}));
    classes.push_back(Json{{"s", cls.s},
                           {"value", round_significant(cls.value())},
                           {"representatives", std::move(reps)},
                           {"multiplicity", cls.multiplicity},
                           {"first_index", cls.first_index},
                           {"last_index", cls.last_index},
                           {"cumulative", cls.last_index}});
  }
  return Json{{"cutoff_s", table.cutoff_s()}, {"classes", std::move(classes)}};
}

// --- certification ---------------------------------------------------------

inline Json verdict_json(const CertificationVerdict& v) {
  Json j{{"k", v.k}, {"lam_over_4pi2", v.lam_over_4pi2}, {"nu", v.nu}, {"verdict", to_string(v.verdict)}};
  if (v.ratio) {
    j["ratio"] = round_significant(v.ratio->to_double());
    j["ratio_exact"] = v.ratio->to_string();
  } else {
    j["ratio"] = nullptr;
  }
  j["bound_used"] = v.bound_used ? Json(round_significant(*v.bound_used)) : Json(nullptr);
  if (v.pleijel_bound) j["pleijel_bound"] = round_significant(*v.pleijel_bound);
  if (v.witness)
    j["witness"] = Json{{"eigenfunction", v.witness->description},
                        {"mu", v.witness->mu},
                        {"grid_size", v.witness->grid_size}};
  return j;
}

inline Json report_json(const CertificationReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  Json indices = Json::array();
  for (const auto& iv : r.indices)
    indices.push_back(Json{{"k", iv.k}, {"nu", iv.nu}, {"lam_over_4pi2", iv.lam_over_4pi2},
                           {"verdict", to_string(iv.verdict)}});
  Json ratios = Json::array();
  for (const auto& row : r.ratio_table)
    ratios.push_back(Json{{"k", row.k}, {"ratio", row.ratio.to_fixed(4)}, {"exact", row.ratio.to_string()}});
  return Json{{"verdicts", std::move(verdicts)},
              {"indices", std::move(indices)},
              {"threshold_k", round_significant(r.threshold_k)},
              {"ratio_bound", round_significant(r.ratio_bound)},
              {"ratio_table", std::move(ratios)},
              {"courant_sharp_indices", r.courant_sharp_indices}};
}

/// Ratio table in a two-row layout followed by the per-eigenvalue verdicts.
inline std::string report_table(const CertificationReport& r) {
  std::ostringstream out;
  char cell[64];
  out << "Ratios lambda_k / (4 k pi^2) at the candidate indices\n";
  out << "k                  ";
  for (const auto& row : r.ratio_table) {
    std::snprintf(cell, sizeof cell, " | %6lld", static_cast<long long>(row.k));
    out << cell;
  }
  out << " |\nlambda_k/(4k pi^2) ";
  for (const auto& row : r.ratio_table) {
    std::snprintf(cell, sizeof cell, " | %6s", row.ratio.to_fixed(4).c_str());
    out << cell;
  }
  out << " |\n\n";
  out << "bound j01^2/(4 pi) = " << fixed(r.ratio_bound, 4) << "   threshold k = " << fixed(r.threshold_k, 4)
      << "\n\n";
  out << "  nu  lambda/4pi^2  verdict                   detail\n";
  for (const auto& v : r.verdicts) {
    std::snprintf(cell, sizeof cell, "%4lld  %12lld  %-24s  ", static_cast<long long>(v.nu),
                  static_cast<long long>(v.lam_over_4pi2), to_string(v.verdict));
    out << cell;
    if (v.witness)
      out << v.witness->description << ", mu = " << v.witness->mu;
    else if (v.pleijel_bound)
      out << "upper bound " << fixed(*v.bound_used, 4) << " < " << fixed(*v.pleijel_bound, 4);
    else if (v.ratio)
      out << "ratio " << v.ratio->to_fixed(4) << " vs " << fixed(*v.bound_used, 4);
    out << "\n";
  }
  out << "\nCourant-sharp indices:";
  for (auto k : r.courant_sharp_indices) out << " " << k;
  out << "\n";
  return out.str();
}

// --- nodal -----------------------------------------------------------------

inline Json decomposition_json(const NodalDecomposition& d) {
  Json domains = Json::array();
  for (const NodalDomain& dom : d.domains)
    domains.push_back(Json{{"id", dom.id},
                           {"sign", dom.sign},
                           {"cell_count", dom.cell_count},
                           {"area", round_significant(dom.area)},
                           {"boundary_edge_count", dom.boundary_edge_count},
                           {"perimeter_estimate", round_significant(dom.perimeter_estimate)}});
  return Json{{"grid_size", d.grid_size},
              {"mu", d.mu},
              {"zero_cell_count", d.zero_cell_count},
              {"topology", d.topology == Topology::Torus ? "torus" : "square"},
              {"domains", std::move(domains)}};
}

inline std::string decomposition_csv(const NodalDecomposition& d) {
  std::string out = "id,sign,cell_count,area,boundary_edge_count,perimeter_estimate\n";
  for (const NodalDomain& dom : d.domains)
    out += std::to_string(dom.id) + "," + std::to_string(dom.sign) + "," + std::to_string(dom.cell_count) + "," +
           significant(dom.area) + "," + std::to_string(dom.boundary_edge_count) + "," +
           significant(dom.perimeter_estimate) + "\n";
  return out;
}

/// Row-major sign grid, one grid row (fixed y) per line, values in {-1, 0, 1}.
inline std::string sign_grid_csv(const SignGrid& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.size) * g.size * 3);
  for (int row = 0; row < g.size; ++row) {
    for (int col = 0; col < g.size; ++col) {
      if (col) out += ',';
      out += std::to_string(g.at(row, col));
    }
    out += '\n';
  }
  return out;
}

inline Json courant_json(const CourantCheck& c) {
  return Json{{"mu", c.mu},
              {"nu", c.nu},
              {"last_index", c.last_index},
              {"satisfied", c.satisfied},
              {"courant_sharp", c.courant_sharp}};
}

inline Json faber_krahn_json(const std::vector<FaberKrahnRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"domain_id", r.domain_id},
                       {"area", round_significant(r.area)},
                       {"product", round_significant(r.product)},
                       {"status", to_string(r.status)}});
  return out;
}

inline Json isoperimetric_json(const std::vector<IsoperimetricRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"domain_id", r.domain_id},
                       {"lhs", round_significant(r.lhs)},
                       {"rhs", round_significant(r.rhs)},
                       {"status", to_string(r.status)}});
  return out;
}

inline Json sweep_json(const SweepConfig& cfg, const SweepResult& r) {
  double min_ratio = 0;
  bool have_ratio = false;
  for (const auto& smp : r.samples) {
    if (!smp.min_faber_krahn_ratio) continue;
    min_ratio = have_ratio ? std::min(min_ratio, *smp.min_faber_krahn_ratio) : *smp.min_faber_krahn_ratio;
    have_ratio = true;
  }
  Json errors = Json::array();
  for (const auto& smp : r.samples)
    if (smp.error) errors.push_back(Json{{"s", smp.s}, {"seed", smp.seed}, {"error", *smp.error}});
  return Json{{"samples", r.samples.size()},
              {"s_values", cfg.s_values},
              {"seeds", cfg.seeds},
              {"courant_violations", r.courant_violations},
              {"sharp_hits_nu_ge_4", r.sharp_hits_nu_ge_4},
              {"refined_samples", r.refinements},
              {"in_hypothesis_domains", r.in_hypothesis_domains},
              {"faber_krahn_genuine_failures", r.faber_krahn_genuine_failures},
              {"isoperimetric_genuine_failures", r.isoperimetric_genuine_failures},
              {"min_faber_krahn_ratio", have_ratio ? Json(round_significant(min_ratio)) : Json(nullptr)},
              {"errors", std::move(errors)}};
}

} // namespace torus::io
