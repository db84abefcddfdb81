#include "f2units/formulas.hpp"

#include <bit>

#include "f2units/errors.hpp"

namespace f2units {

namespace {

int lg(std::int64_t n) { return std::countr_zero(static_cast<std::uint64_t>(n)); }

Prediction power(std::string name, std::int64_t twice, std::string variant = "") {
  return {std::move(name), std::move(variant), Prediction::Kind::kPower, twice};
}

Prediction count(std::string name, std::int64_t twice) {
  return {std::move(name), "", Prediction::Kind::kCount, twice};
}

std::int64_t order_of(const SubgroupOfG& s) { return static_cast<std::int64_t>(s.order()); }

}  // namespace

std::optional<std::uint64_t> Prediction::value() const {
  if (!integral() || twice < 0) return std::nullopt;
  const std::int64_t v = twice / 2;
  if (kind == Kind::kCount) return static_cast<std::uint64_t>(v);
  if (v >= 64) return std::nullopt;
  return std::uint64_t{1} << v;
}

std::optional<int> Prediction::log2() const {
  if (kind != Kind::kPower || !integral() || twice < 0) return std::nullopt;
  return static_cast<int>(twice / 2);
}

const char* to_string(T2Variant v) {
  return v == T2Variant::kProof ? "t2_proof" : "t2_statement";
}

GroupProfile make_profile(const Involution& inv) {
  const AbelianTwoGroup& grp = inv.group();
  const SubgroupOfG g = SubgroupOfG::whole(grp);
  const SubgroupOfG h = SubgroupOfG::coordinate(grp, inv.h_block());
  const SubgroupOfG d = SubgroupOfG::coordinate(grp, inv.d_block());
  GroupProfile p;
  p.group = grp.to_string();
  p.g = order_of(g);
  p.g2 = order_of(power_subgroup(g, 1));
  p.g_tors2 = order_of(torsion_subgroup(g, 1));
  p.g2_tors2 = order_of(torsion_subgroup(power_subgroup(g, 1), 1));
  p.h = order_of(h);
  p.h_tors2 = order_of(torsion_subgroup(h, 1));
  p.h_tors4 = order_of(torsion_subgroup(h, 2));
  p.h2_tors2 = order_of(torsion_subgroup(power_subgroup(h, 1), 1));
  p.d = order_of(d);
  p.d2 = order_of(power_subgroup(d, 1));
  p.g_eta = order_of(fixed_subgroup(inv));
  for (int i = 0;; ++i) {
    const SubgroupOfG gi = power_subgroup(g, i);
    p.g_pow.push_back(order_of(gi));
    p.h_pow_tors2.push_back(order_of(torsion_subgroup(power_subgroup(h, i), 1)));
    p.d_pow.push_back(order_of(power_subgroup(d, i)));
    if (gi.order() == 1) break;
  }
  for (std::size_t i : inv.h_block()) p.h_orders.push_back(grp.factor_order(i));
  for (std::size_t i : inv.d_block()) p.d_orders.push_back(grp.factor_order(i));
  p.canonicalized = inv.is_canonicalized();
  p.canonical_involution = inv.is_canonical_involution();
  return p;
}

Prediction predict_t1(const GroupProfile& p) {
  return power("t1", p.g + p.h_tors2 * p.d - 2);
}

Prediction predict_t2(const GroupProfile& p, T2Variant v) {
  const std::int64_t h = v == T2Variant::kProof ? p.h2_tors2 : p.h_tors2;
  return power("t2", p.g2 - p.d2 * (h - 2) - 2, to_string(v));
}

Prediction predict_t3(const GroupProfile& p) {
  return power("t3", p.g - p.g2 + p.h_tors2 * (p.d + p.d2) - 2 * p.d2);
}

Prediction predict_v_eta_order(const GroupProfile& p) {
  return power("v_eta_order", 2 * lg(p.h_tors2) + p.g + p.h_tors2 * p.d - 2 * p.d2);
}

Prediction predict_w_power_order(const GroupProfile& p, std::size_t i) {
  return power("w_power_order_" + std::to_string(i),
               p.g_power(i) - p.h_power_tors2(i) * p.d_power(i));
}

Prediction predict_w_two_torsion(const GroupProfile& p) {
  return power("w_two_torsion_order", p.g - p.g2 - p.h_tors2 * (p.d - p.d2));
}

Prediction predict_corollary(const GroupProfile& p) {
  if (!p.canonical_involution) {
    throw PreconditionError("the V_* closed form needs the canonical involution");
  }
  return power("corollary_v_star_order", 2 * lg(p.g2_tors2) + p.g + p.g_tors2 - 2);
}

CountPredictions predict_counts(const GroupProfile& p) {
  CountPredictions c;
  c.v_order = power("v_order", 2 * (p.g - 1));
  c.t_order = power("t_order", 2 * (p.h_tors2 - 1) * p.d);
  c.xi = count("xi_count", p.g - p.g_eta);
  c.xi0 = count("xi0_count", (p.h_tors4 - p.h_tors2) * p.d);
  c.xi_bar = count("xi_orbit_count", p.g2 - p.h2_tors2 * p.d2);
  c.g_eta = count("fixed_subgroup_order", 2 * p.h_tors2 * p.d);
  c.v_two_torsion = power("v_two_torsion_order", 2 * (p.g - p.g2));
  c.p_two_torsion = power("p_two_torsion_order", 2 * (p.h_tors2 * p.d - p.d2));
  return c;
}

std::vector<Prediction> all_predictions(const GroupProfile& p) {
  std::vector<Prediction> out{predict_t1(p), predict_t2(p, T2Variant::kProof),
                              predict_t2(p, T2Variant::kStatement), predict_t3(p),
                              predict_v_eta_order(p)};
  for (std::size_t i = 0; i < p.g_pow.size(); ++i) out.push_back(predict_w_power_order(p, i));
  out.push_back(predict_w_two_torsion(p));
  if (p.canonical_involution) out.push_back(predict_corollary(p));
  const CountPredictions c = predict_counts(p);
  for (const Prediction& x : {c.v_order, c.t_order, c.xi, c.xi0, c.xi_bar, c.g_eta,
                              c.v_two_torsion, c.p_two_torsion}) {
    out.push_back(x);
  }
  return out;
}

const std::vector<FormulaLedgerEntry>& formula_ledger() {
  static const std::vector<FormulaLedgerEntry> ledger = {
      {"t1", "|S_eta| = 2^t1, order of the symmetric unit group",
       "t1 = (|G| + |H[2]|*|D|)/2 - 1"},
      {"t2/t2_proof", "|S_eta^2| = 2^t2, squares of symmetric units (as used in the derivation)",
       "t2 = (|G^2| - |D^2|*(|H^2[2]| - 2))/2 - 1"},
      {"t2/t2_statement", "|S_eta^2| = 2^t2, squares of symmetric units (as stated)",
       "t2 = (|G^2| - |D^2|*(|H[2]| - 2))/2 - 1"},
      {"t3", "|S_eta[2]| = 2^t3, involutions among symmetric units; t3 = t1 - t2",
       "t3 = (|G| - |G^2| + |H[2]|*(|D| + |D^2|) - 2|D^2|)/2"},
      {"v_eta_order", "order of the unitary unit group",
       "|V_eta| = |H[2]| * 2^((|G| + |H[2]|*|D|)/2 - |D^2|)"},
      {"w_power_order_i", "order of W(FG)^(2^i), and of W(F[G^(2^i)])",
       "log2 |W^(2^i)| = (|G^(2^i)| - |H^(2^i)[2]|*|D^(2^i)|)/2"},
      {"w_two_torsion_order", "order of W(FG)[2]",
       "log2 |W[2]| = (|G| - |G^2| - |H[2]|*(|D| - |D^2|))/2"},
      {"corollary_v_star_order", "order of the unitary units for the canonical involution",
       "|V_*| = |G^2[2]| * 2^((|G| + |G[2]|)/2 - 1)"},
      {"v_order", "order of V(FG)", "|V(FG)| = 2^(|G| - 1)"},
      {"t_order", "order of T(FG)", "|T(FG)| = 2^((|H[2]| - 1)*|D|)"},
      {"xi_count", "number of pairs {g, eta(g)} with g not fixed", "|Xi| = (|G| - |G_eta|)/2"},
      {"xi0_count", "pairs with g^2 = eta(g)^2", "|Xi_0| = (|H[4]| - |H[2]|)*|D|/2"},
      {"xi_orbit_count", "G[2]-orbits on the remaining pairs", "|Xi_bar| = (|G^2| - |H^2[2]|*|D^2|)/2"},
      {"fixed_subgroup_order", "G_eta = H[2] x D", "|G_eta| = |H[2]|*|D|"},
      {"v_two_torsion_order", "V(FG)[2] = 1 + I(G[2])", "|V(FG)[2]| = 2^(|G| - |G^2|)"},
      {"p_two_torsion_order", "1 + I(P[2]) for P = H[2] x D", "log2 = |H[2]|*|D| - |D^2|"},
  };
  return ledger;
}

}  // namespace f2units
