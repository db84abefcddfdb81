#pragma once

// Verification harness: the catalog of (G, eta) cases, the per-case checks
// comparing formulas, structural constructions and brute-force oracles, and
// the side suite run with order-2 generators left in the inverted block.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2units/descriptor.hpp"
#include "f2units/formulas.hpp"

namespace f2units {

enum class CaseMode { kExplicit, kStructural };
const char* to_string(CaseMode m);

struct TestCase {
  GroupDescriptor descriptor;
  CaseMode mode = CaseMode::kExplicit;
  // False for side-suite cases, whose involution keeps order-2 generators
  // in the H block.
  bool canonicalized = true;

  Involution involution() const;
  std::string name() const { return format_descriptor(descriptor); }
};

struct HarnessOptions {
  int max_order = 32;
  T2Variant t2_variant = T2Variant::kProof;
  bool include_noncanonical = false;
  // Symmetric elements drawn per element h for the psi_1 identities when the
  // symmetric elements are too many to enumerate.
  int psi_samples = 64;
  std::uint64_t seed = 0x5eed2f2u;
};

// A numeric comparison. scale is "log2" (orders compared through their
// exponents), "count" or "flag" (predicted 1, observed 1 when the property
// holds).
struct FormulaCheck {
  std::string name;
  std::string variant;
  std::string scale;
  double predicted = 0;
  double observed = 0;
  bool pass = false;
  bool is_default = true;
};

struct SetCheck {
  std::string name;
  std::string variant;
  int lhs_order_log2 = 0;
  int rhs_order_log2 = 0;
  bool equal = false;
  // Both sides trivial, or an intersection with a trivial operand.
  bool degenerate = false;
  bool is_default = true;
};

struct IdentitySummary {
  std::string name;
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  bool pass() const { return passed == applicable; }
};

struct OracleValue {
  std::string name;
  std::uint64_t value = 0;
};

struct CaseReport {
  TestCase test_case;
  GroupProfile profile;
  std::vector<Prediction> predictions;
  std::vector<OracleValue> oracle;
  std::vector<FormulaCheck> formula_checks;
  std::vector<SetCheck> set_checks;
  std::vector<IdentitySummary> identity_checks;
  std::vector<std::pair<std::string, std::string>> invariants;
  std::string error;
  double elapsed_ms = 0;

  // All default-variant checks pass and nothing threw.
  bool pass() const;
  std::vector<std::string> failures() const;
  std::size_t check_count() const;
};

struct T2Resolution {
  std::size_t cases_compared = 0;
  std::vector<std::string> statement_disagrees;
  std::vector<std::string> proof_disagrees;
  std::string verdict;
};

struct VerificationReport {
  HarnessOptions options;
  std::vector<std::string> groups;
  std::size_t explicit_groups = 0;
  std::size_t structural_groups = 0;
  std::vector<CaseReport> cases;
  std::vector<CaseReport> side_cases;
  T2Resolution t2_resolution;
  double elapsed_ms = 0;

  bool pass() const;
};

// Every abelian 2-group of order <= max_order (one per partition of the
// exponent), the trivial group included, ordered by order and then by
// factor orders.
std::vector<AbelianTwoGroup> catalog_groups(int max_order);
// One case per (H orders, D orders) profile after canonicalization.
std::vector<TestCase> catalog_cases(int max_order);
// Raw involutions with an order-2 generator marked inverted, one per raw
// profile; explicit groups only.
std::vector<TestCase> noncanonical_cases(int max_order);
TestCase make_case(const GroupDescriptor& d);

CaseReport run_case(const TestCase& tc, const HarnessOptions& options);
VerificationReport run_catalog(const HarnessOptions& options);
VerificationReport run_cases(const std::vector<TestCase>& cases, const HarnessOptions& options);
T2Resolution resolve_t2(const std::vector<CaseReport>& cases,
                        const std::vector<CaseReport>& side_cases);

}  // namespace f2units
