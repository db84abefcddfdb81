#pragma once

// Machine-readable output of the harness: the JSON report, the CSV summary,
// human-readable tables and the subgroup export format.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "f2units/harness.hpp"
#include "f2units/unit_subgroup.hpp"

namespace f2units {

nlohmann::ordered_json case_to_json(const CaseReport& c);
// Field order and contents are deterministic apart from the elapsed_ms
// fields.
nlohmann::ordered_json report_to_json(const VerificationReport& r);
// One row per case: case,mode,status,checks,failed,elapsed_ms.
std::string report_to_csv(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r, bool verbose);

// {"order": "2^k", "order_log2": k, "invariants": [...], "elements": [...]}
// with the elements in the textual format; elements only when materialized
// within the cap.
nlohmann::ordered_json export_subgroup(const UnitSubgroup& a, bool with_elements);

// report.json, summary.csv and formula_ledger.md under dir.
void write_report_dir(const VerificationReport& r, const std::filesystem::path& dir);

}  // namespace f2units
