#pragma once

#include <json.hpp>

#include "geoprove/oracle.hpp"
#include "geoprove/prover.hpp"

namespace geoprove {

// ordered_json keeps insertion order, so emitted documents re-serialize
// byte-identically after parsing.
using Json = nlohmann::ordered_json;

Json report_json(const ProofReport& report);
Json oracle_json(const OracleResult& result, const UniversalAssignment& assignment);

std::string report_text(const ProofReport& report);
std::string oracle_text(const OracleResult& result, const UniversalAssignment& assignment);

const char* method_name(Method m);
const char* verdict_name(Verdict v);
const char* mode_name(ImplicationMode m);
const char* evidence_status_name(EvidenceStatus s);

}  // namespace geoprove
