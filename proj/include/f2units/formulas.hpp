#pragma once

// Closed-form order formulas, evaluated from subgroup sizes of G only. Nothing
// here touches the group algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2units/group.hpp"

namespace f2units {

struct GroupProfile {
  std::string group;
  std::int64_t g = 1;        // |G|
  std::int64_t g2 = 1;       // |G^2|
  std::int64_t g_tors2 = 1;  // |G[2]|
  std::int64_t g2_tors2 = 1; // |G^2[2]|
  std::int64_t h = 1;
  std::int64_t h_tors2 = 1;  // |H[2]|
  std::int64_t h_tors4 = 1;  // |H[4]|
  std::int64_t h2_tors2 = 1; // |H^2[2]|
  std::int64_t d = 1;
  std::int64_t d2 = 1;
  std::int64_t g_eta = 1;
  // Index i holds the value for 2^i, up to the first trivial power.
  std::vector<std::int64_t> g_pow;
  std::vector<std::int64_t> h_pow_tors2;
  std::vector<std::int64_t> d_pow;
  std::vector<std::uint32_t> h_orders;
  std::vector<std::uint32_t> d_orders;
  bool canonicalized = true;
  bool canonical_involution = false;

  std::int64_t g_power(std::size_t i) const { return i < g_pow.size() ? g_pow[i] : 1; }
  std::int64_t h_power_tors2(std::size_t i) const { return i < h_pow_tors2.size() ? h_pow_tors2[i] : 1; }
  std::int64_t d_power(std::size_t i) const { return i < d_pow.size() ? d_pow[i] : 1; }
};

GroupProfile make_profile(const Involution& inv);

// A formula value kept as twice the exponent (kind kPower) or twice the count
// (kind kCount), so that half-integers coming from ill-posed inputs stay
// visible instead of being rounded.
struct Prediction {
  enum class Kind { kPower, kCount };

  std::string name;
  std::string variant;
  Kind kind = Kind::kPower;
  std::int64_t twice = 0;

  bool integral() const { return twice % 2 == 0; }
  double exponent() const { return static_cast<double>(twice) / 2.0; }
  // 2^exponent or the count; empty when not a non-negative integer.
  std::optional<std::uint64_t> value() const;
  // log2 of value() for kPower.
  std::optional<int> log2() const;
};

enum class T2Variant { kProof, kStatement };
const char* to_string(T2Variant v);

Prediction predict_t1(const GroupProfile& p);
Prediction predict_t2(const GroupProfile& p, T2Variant v = T2Variant::kProof);
Prediction predict_t3(const GroupProfile& p);
Prediction predict_v_eta_order(const GroupProfile& p);
Prediction predict_w_power_order(const GroupProfile& p, std::size_t i);
Prediction predict_w_two_torsion(const GroupProfile& p);
// Throws PreconditionError unless the involution is inversion on all of G.
Prediction predict_corollary(const GroupProfile& p);

struct CountPredictions {
  Prediction v_order;
  Prediction t_order;
  Prediction xi;
  Prediction xi0;
  Prediction xi_bar;
  Prediction g_eta;
  Prediction v_two_torsion;
  Prediction p_two_torsion;
};
CountPredictions predict_counts(const GroupProfile& p);

// Every prediction for a profile, in report order. The V_* closed form is included
// only for the canonical involution; W powers run until G^(2^i) is trivial.
std::vector<Prediction> all_predictions(const GroupProfile& p);

struct FormulaLedgerEntry {
  std::string id;
  std::string claim;
  std::string expression;
};
const std::vector<FormulaLedgerEntry>& formula_ledger();

}  // namespace f2units
