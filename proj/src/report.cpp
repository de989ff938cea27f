#include "geoprove/report.hpp"

#include <sstream>

namespace geoprove {

const char* method_name(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::autarky: return "autarky";
    case Method::substitution: return "substitution";
    case Method::refuted: return "refuted";
    case Method::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::proved: return "proved";
    case Verdict::not_proved: return "not_proved";
    case Verdict::disproved_at_witness: return "disproved_at_witness";
  }
  return "?";
}

const char* mode_name(ImplicationMode m) {
  switch (m) {
    case ImplicationMode::assumed: return "assumed";
    case ImplicationMode::divides: return "divides";
    case ImplicationMode::sampled: return "sampled";
  }
  return "?";
}

const char* evidence_status_name(EvidenceStatus s) {
  switch (s) {
    case EvidenceStatus::asserted: return "asserted";
    case EvidenceStatus::exact_division: return "exact_division";
    case EvidenceStatus::division_failed: return "division_failed";
    case EvidenceStatus::trivially_true: return "trivially_true";
    case EvidenceStatus::sampled_ok: return "sampled_ok";
    case EvidenceStatus::sampled_failed: return "sampled_failed";
    case EvidenceStatus::sampled_no_real_solutions: return "sampled_no_real_solutions";
  }
  return "?";
}

Json report_json(const ProofReport& report) {
  Json j;
  j["method"] = method_name(report.method);
  j["verdict"] = verdict_name(report.verdict);
  Json thesis;
  thesis["polynomial"] = report.thesis_poly.str();
  thesis["raw_numerator"] = report.thesis_raw.str();
  thesis["degree_bound"] = report.degree_bound;
  j["thesis"] = std::move(thesis);
  if (report.mcs_poly) {
    Json m;
    m["polynomial"] = report.mcs_poly->str();
    m["degree"] = *report.mcs_degree;
    j["mcs"] = std::move(m);
  }
  if (!report.cases.empty()) {
    Json cases = Json::array();
    for (const auto& hc : report.cases) {
      Json c;
      c["name"] = hc.name;
      c["polynomial"] = hc.poly.poly.str();
      c["degree"] = hc.poly.poly.total_degree();
      c["mode"] = mode_name(hc.mode);
      c["r_factorizable"] =
          hc.r_factorizable == RFactFlag::asserted ? "asserted" : "unchecked";
      if (hc.density_hits >= 0) {
        Json probe;
        probe["hits"] = hc.density_hits;
        probe["probes"] = hc.density_probes;
        c["real_line_probe"] = std::move(probe);
      }
      Json ev;
      ev["status"] = evidence_status_name(hc.evidence.status);
      ev["detail"] = hc.evidence.detail;
      if (hc.evidence.max_abs_value) ev["max_abs_value"] = *hc.evidence.max_abs_value;
      if (hc.evidence.mode == ImplicationMode::sampled) {
        ev["samples"] = hc.evidence.samples;
        ev["roots_found"] = hc.evidence.roots_found;
      }
      c["evidence"] = std::move(ev);
      cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
  }
  Json nd = Json::array();
  for (const auto& p : report.nondegeneracy) nd.push_back(p.str());
  j["nondegeneracy"] = std::move(nd);
  j["assumptions"] = report.assumptions;
  if (report.witness) {
    Json w;
    for (const auto& [name, value] : report.witness->point) w[name] = value.get_str();
    j["witness"] = std::move(w);
  }
  if (report.residual) j["residual"] = report.residual->str();
  if (report.diagnostic) j["diagnostic"] = *report.diagnostic;
  return j;
}

Json oracle_json(const OracleResult& result, const UniversalAssignment& assignment) {
  Json j;
  j["verdict"] =
      result.verdict == OracleVerdict::likely_identity ? "likely_identity" : "not_identity";
  j["value"] = result.value;
  j["margin"] = result.margin;
  j["precision_bits"] = result.precision_bits;
  j["caveat"] = result.caveat;
  Json gens;
  for (std::size_t i = 0; i < assignment.generators.size(); ++i)
    gens[assignment.table->name(i)] = assignment.generators[i];
  j["generators"] = std::move(gens);
  j["note"] = "positive verdicts are heuristic: the precision that certifies a nonzero "
              "value is not known in advance";
  return j;
}

std::string report_text(const ProofReport& report) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  out << "method: " << method_name(report.method) << "\n";
  out << "thesis polynomial: " << report.thesis_poly.str() << "\n";
  if (!(report.thesis_raw == report.thesis_poly))
    out << "raw numerator: " << report.thesis_raw.str() << "\n";
  out << "degree bound d: " << report.degree_bound << "\n";
  if (report.mcs_poly)
    out << "m.c.s.: " << report.mcs_poly->str() << " (degree D: " << *report.mcs_degree
        << ")\n";
  for (const auto& hc : report.cases) {
    out << "case " << hc.name << ": " << hc.poly.poly.str() << " (degree "
        << hc.poly.poly.total_degree() << ", mode " << mode_name(hc.mode) << ")\n";
    out << "  evidence: " << evidence_status_name(hc.evidence.status) << "; "
        << hc.evidence.detail << "\n";
    if (hc.density_hits >= 0)
      out << "  real-line probe: " << hc.density_hits << "/" << hc.density_probes
          << " lines met the real zero set\n";
  }
  if (!report.nondegeneracy.empty()) {
    out << "nondegeneracy (must stay nonzero):";
    for (const auto& p : report.nondegeneracy) out << " " << p.str() << ";";
    out << "\n";
  }
  if (report.witness) {
    out << "witness:";
    for (const auto& [name, value] : report.witness->point)
      out << " " << name << " = " << value.get_str() << ";";
    out << "\n";
  }
  if (report.residual) out << "residual: " << report.residual->str() << "\n";
  for (const auto& a : report.assumptions) out << "assumption: " << a << "\n";
  if (report.diagnostic) out << "diagnostic: " << *report.diagnostic << "\n";
  return out.str();
}

std::string oracle_text(const OracleResult& result, const UniversalAssignment& assignment) {
  std::ostringstream out;
  out << "oracle verdict: "
      << (result.verdict == OracleVerdict::likely_identity ? "likely_identity"
                                                           : "not_identity")
      << "\n";
  out << "value: " << result.value << "\n";
  out << "margin: " << result.margin << "\n";
  out << "precision: " << result.precision_bits << " bits\n";
  if (result.caveat)
    out << "caveat: retry cap reached with the interval still straddling zero\n";
  out << "generators:";
  for (std::size_t i = 0; i < assignment.generators.size(); ++i)
    out << " " << assignment.table->name(i) << " -> " << assignment.generators[i] << ";";
  out << "\n";
  return out.str();
}

}  // namespace geoprove
