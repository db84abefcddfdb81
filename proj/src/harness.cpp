#include "f2units/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "f2units/errors.hpp"
#include "f2units/oracle.hpp"
#include "f2units/units.hpp"

namespace f2units {

const char* to_string(CaseMode m) { return m == CaseMode::kExplicit ? "explicit" : "structural"; }

Involution TestCase::involution() const {
  return canonicalized ? Involution::canonicalized(descriptor.group, descriptor.raw_inverted)
                       : Involution::uncanonicalized(descriptor.group, descriptor.raw_inverted);
}

bool CaseReport::pass() const {
  if (!error.empty()) return false;
  for (const auto& c : formula_checks) {
    if (c.is_default && !c.pass) return false;
  }
  for (const auto& c : set_checks) {
    if (c.is_default && !c.degenerate && !c.equal) return false;
  }
  for (const auto& c : identity_checks) {
    if (!c.pass()) return false;
  }
  return true;
}

std::vector<std::string> CaseReport::failures() const {
  std::vector<std::string> out;
  if (!error.empty()) out.push_back("error: " + error);
  const auto tag = [](const std::string& name, const std::string& variant) {
    return variant.empty() ? name : name + "/" + variant;
  };
  for (const auto& c : formula_checks) {
    if (c.is_default && !c.pass) {
      out.push_back(tag(c.name, c.variant) + ": predicted " + std::to_string(c.predicted) +
                    ", observed " + std::to_string(c.observed));
    }
  }
  for (const auto& c : set_checks) {
    if (c.is_default && !c.degenerate && !c.equal) {
      out.push_back(tag(c.name, c.variant) + ": sets differ (2^" + std::to_string(c.lhs_order_log2) +
                    " vs 2^" + std::to_string(c.rhs_order_log2) + ")");
    }
  }
  for (const auto& c : identity_checks) {
    if (!c.pass()) {
      out.push_back(c.name + ": " + std::to_string(c.passed) + "/" + std::to_string(c.applicable));
    }
  }
  return out;
}

std::size_t CaseReport::check_count() const {
  return formula_checks.size() + set_checks.size() + identity_checks.size();
}

bool VerificationReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.pass(); });
}

namespace {

// Non-increasing partitions of n into positive parts.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::uint32_t> sorted_desc(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

using ProfileKey = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

ProfileKey profile_key(const Involution& inv) {
  std::vector<std::uint32_t> h, d;
  for (std::size_t i : inv.h_block()) h.push_back(inv.group().factor_order(i));
  for (std::size_t i : inv.d_block()) d.push_back(inv.group().factor_order(i));
  return {sorted_desc(h), sorted_desc(d)};
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

int lg(std::size_t n) { return std::countr_zero(static_cast<std::uint64_t>(n)); }

// Set of units with |set| a power of two; the log is only meaningful then.
int set_log2(const ElementSet& s) { return s.empty() ? -1 : lg(s.size()); }

ElementSet as_set(const UnitSubgroup& a) { return a.elements(); }

ElementSet group_set(const GroupAlgebra& alg, const SubgroupOfG& k) {
  return oracle_group_elements(alg, k);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

class CaseRunner {
 public:
  CaseRunner(CaseReport& report, const HarnessOptions& options)
      : r_(report), options_(options) {}

  void oracle(const std::string& name, std::uint64_t value) { r_.oracle.push_back({name, value}); }

  void power(const Prediction& p, int observed_log2, const std::string& variant = "",
             bool is_default = true) {
    FormulaCheck c{p.name, variant.empty() ? p.variant : variant, "log2", p.exponent(),
                   static_cast<double>(observed_log2), false, is_default};
    c.pass = p.log2().has_value() && *p.log2() == observed_log2;
    r_.formula_checks.push_back(c);
  }

  void count(const Prediction& p, std::uint64_t observed, const std::string& variant = "") {
    FormulaCheck c{p.name, variant, "count", p.exponent(), static_cast<double>(observed), false,
                   true};
    c.pass = p.value().has_value() && *p.value() == observed;
    r_.formula_checks.push_back(c);
  }

  void compare(const std::string& name, const std::string& scale, double predicted,
               double observed, const std::string& variant = "", bool is_default = true) {
    r_.formula_checks.push_back(
        {name, variant, scale, predicted, observed, predicted == observed, is_default});
  }

  void flag(const std::string& name, bool ok, const std::string& variant = "") {
    compare(name, "flag", 1, ok ? 1 : 0, variant);
  }

  void sets(const std::string& name, const ElementSet& lhs, const ElementSet& rhs,
            const std::string& variant = "", bool is_default = true) {
    r_.set_checks.push_back({name, variant, set_log2(lhs), set_log2(rhs), lhs == rhs,
                             lhs.size() <= 1 && rhs.size() <= 1, is_default});
  }

  // A cap B = expected.
  void meet(const std::string& name, const ElementSet& a, const ElementSet& b,
            const ElementSet& expected) {
    const ElementSet m = oracle_intersection(a, b);
    r_.set_checks.push_back({name, "", set_log2(m), set_log2(expected), m == expected,
                             a.size() <= 1 || b.size() <= 1, true});
  }

  // Structural version where only orders are available: log2 |A cap B| = expected.
  void meet_order(const std::string& name, const UnitSubgroup& a, const UnitSubgroup& b,
                  int expected_log2) {
    const int m = intersection_order_log2(a, b);
    r_.set_checks.push_back({name, "order", m, expected_log2, m == expected_log2,
                             a.is_trivial() || b.is_trivial(), true});
  }

  void subgroups(const std::string& name, const UnitSubgroup& lhs, const UnitSubgroup& rhs,
                 const std::string& variant = "") {
    r_.set_checks.push_back({name, variant, lhs.order_log2(), rhs.order_log2(), lhs == rhs,
                             lhs.is_trivial() && rhs.is_trivial(), true});
  }

  IdentitySummary& identity(const std::string& name) {
    for (auto& c : r_.identity_checks) {
      if (c.name == name) return c;
    }
    r_.identity_checks.push_back({name, 0, 0});
    return r_.identity_checks.back();
  }

  const HarnessOptions& options() const { return options_; }
  CaseReport& report() { return r_; }

 private:
  CaseReport& r_;
  const HarnessOptions& options_;
};

const Prediction& find_prediction(const std::vector<Prediction>& ps, const std::string& name,
                                  const std::string& variant = "") {
  for (const auto& p : ps) {
    if (p.name == name && p.variant == variant) return p;
  }
  throw std::logic_error("no prediction named " + name);
}

// Checks that need no unit enumeration; shared by both modes.
void group_level_checks(CaseRunner& run, const GroupAlgebra& alg, const Involution& inv,
                        const std::vector<Prediction>& ps) {
  const AbelianTwoGroup& grp = inv.group();
  const SubgroupOfG g = SubgroupOfG::whole(grp);
  const XiSets xi = xi_sets(inv);
  run.oracle("xi_count", xi.xi);
  run.oracle("xi0_count", xi.xi0);
  run.oracle("xi_orbit_count", xi.orbits);
  run.count(find_prediction(ps, "xi_count"), xi.xi);
  run.count(find_prediction(ps, "xi0_count"), xi.xi0);
  run.count(find_prediction(ps, "xi_orbit_count"), xi.orbits);
  // X = G[2] acts freely on Xi_1.
  run.compare("xi1_free_action", "count", static_cast<double>(xi.xi1),
              static_cast<double>(xi.orbits * torsion_subgroup(g, 1).order()));

  const SubgroupOfG fixed = fixed_subgroup(inv);
  run.count(find_prediction(ps, "fixed_subgroup_order"), fixed.order());
  run.sets("fixed_subgroup_decomposition", group_set(alg, fixed),
           group_set(alg, subgroup_join(torsion_subgroup(h_subgroup(inv), 1), d_subgroup(inv))));

  // Ideal ranks.
  const auto ideal = alg.ideal_basis(torsion_subgroup(g, 1));
  run.power(find_prediction(ps, "v_two_torsion_order"), static_cast<int>(f2_rank(ideal)),
            "ideal_rank");
  const SubgroupOfG p = subgroup_join(torsion_subgroup(h_subgroup(inv), 1), d_subgroup(inv));
  const auto p_ideal = alg.ideal_basis(torsion_subgroup(p, 1), p);
  run.power(find_prediction(ps, "p_two_torsion_order"), static_cast<int>(f2_rank(p_ideal)),
            "ideal_rank");

  // Formula self-consistency.
  const Prediction t1 = predict_t1(run.report().profile);
  const Prediction t2 = predict_t2(run.report().profile, T2Variant::kProof);
  const Prediction t3 = predict_t3(run.report().profile);
  run.compare("t3_equals_t1_minus_t2", "log2", t3.exponent(), t1.exponent() - t2.exponent(),
              "t2_proof");
  if (run.report().profile.canonical_involution) {
    run.compare("corollary_matches_unitary_order", "log2",
                find_prediction(ps, "corollary_v_star_order").exponent(),
                find_prediction(ps, "v_eta_order").exponent());
  }
}

// Orders of the basis units, their closure and the product of their orders.
AbelianInvariants basis_checks(CaseRunner& run, std::shared_ptr<const GroupAlgebra> alg,
                               const Involution& inv, const std::vector<Prediction>& ps,
                               const UnitSubgroup& v_generated) {
  const IndexSets sets = sandling_index_sets(inv);
  std::uint64_t matches = 0;
  int log_sum = 0;
  std::vector<std::uint64_t> orders;
  for (const auto& iv : sets.l) {
    const std::uint64_t o = unit_order(*alg, basis_unit(*alg, iv.alpha));
    if (o == unit_order_formula(alg->group(), iv.alpha)) ++matches;
    log_sum += std::countr_zero(o);
    orders.push_back(o);
  }
  run.oracle("basis_size", sets.l.size());
  run.compare("basis_unit_orders", "count", static_cast<double>(sets.l.size()),
              static_cast<double>(matches));
  const Prediction& v = find_prediction(ps, "v_order");
  run.power(v, v_generated.order_log2(), "basis_closure");
  run.power(v, log_sum, "basis_order_product");

  std::uint64_t l1_order_two = 0;
  for (const auto& iv : sets.l1) {
    if (unit_order(*alg, basis_unit(*alg, iv.alpha)) == 2) ++l1_order_two;
  }
  run.compare("l1_units_have_order_two", "count", static_cast<double>(sets.l1.size()),
              static_cast<double>(l1_order_two));
  run.oracle("l1_size", sets.l1.size());
  run.oracle("l2_size", sets.l2.size());
  run.oracle("l3_size", sets.l3.size());
  return invariants_from_factor_orders(orders);
}

void inverse_identity_checks(CaseRunner& run, const GroupAlgebra& alg) {
  const AbelianTwoGroup& g = alg.group();
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (g.element_order({i}) < 4) continue;
    for (const auto& c : check_inverse_identities(alg, {i})) {
      if (!c.applicable) continue;
      auto& s = run.identity(c.name);
      ++s.applicable;
      if (c.holds) ++s.passed;
    }
  }
}

void psi_identity_checks(CaseRunner& run, const GroupAlgebra& alg, const Involution& inv) {
  const AbelianTwoGroup& g = alg.group();
  std::vector<GroupElement> hs;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (g.element_order({i}) >= 4 && inv.apply({i}) == g.inverse({i})) hs.push_back({i});
  }
  if (hs.empty()) return;

  // Symmetric elements: all of them when few, else a seeded sample of the span.
  std::vector<AlgebraElement> basis;
  const XiSets xi = xi_sets(inv);
  const SubgroupOfG fixed = fixed_subgroup(inv);
  for (const auto& p : xi.pairs) basis.push_back(alg.add(alg.element(p.rep), alg.element(p.image)));
  for (GroupElement x : fixed.elements()) basis.push_back(alg.element(x));
  std::vector<AlgebraElement> symmetric;
  if (basis.size() <= 12) {
    symmetric = symmetric_elements(alg, inv, std::uint64_t{1} << 12);
  } else {
    std::mt19937_64 rng(run.options().seed ^ fnv1a(run.report().test_case.name()));
    for (int k = 0; k < run.options().psi_samples; ++k) {
      const std::uint64_t mask = rng();
      AlgebraElement s = alg.zero();
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if ((mask >> b) & 1) s = alg.add(s, basis[b]);
      }
      symmetric.push_back(s);
    }
  }
  for (GroupElement h : hs) {
    const bool big = g.element_order(h) > 4;
    auto& summary = run.identity(big ? "psi_identity_order_above_4" : "psi_identity_order_4");
    for (const auto& s : symmetric) {
      ++summary.applicable;
      if (check_psi_identity(alg, inv, h, s).holds()) ++summary.passed;
    }
  }
}

void invariants_entry(CaseRunner& run, const std::string& name, const UnitSubgroup& a,
                      bool explicit_mode) {
  const AbelianInvariants by_powers = invariants(a);
  run.report().invariants.emplace_back(name, by_powers.to_string());
  if (explicit_mode) {
    const AbelianInvariants by_torsion = invariants_by_torsion(a);
    run.flag("invariant_routes_agree", by_powers == by_torsion, name);
  }
}

void explicit_checks(CaseRunner& run, std::shared_ptr<const GroupAlgebra> alg,
                     const Involution& inv, const std::vector<Prediction>& ps,
                     T2Variant t2_default) {
  const GroupAlgebra& a = *alg;
  const AbelianTwoGroup& grp = inv.group();
  const SubgroupOfG g = SubgroupOfG::whole(grp);
  const SubgroupOfG h = h_subgroup(inv);
  const SubgroupOfG d = d_subgroup(inv);

  // V(FG) and the Sandling basis.
  const ElementSet v_or = oracle_units(a);
  run.oracle("v_order", v_or.size());
  run.power(find_prediction(ps, "v_order"), set_log2(v_or), "oracle");
  const UnitSubgroup v_gen = full_unit_group(alg, Mode::kStructural);
  run.sets("basis_generates_v", as_set(v_gen), v_or);
  const AbelianInvariants basis_orders = basis_checks(run, alg, inv, ps, v_gen);

  // Symmetric units.
  const ElementSet s_or = oracle_filter_symmetric(a, inv);
  const UnitSubgroup s_nf = symmetric_units(alg, inv);
  run.oracle("symmetric_order", s_or.size());
  run.sets("symmetric_normal_form", as_set(s_nf), s_or);
  run.power(find_prediction(ps, "t1"), set_log2(s_or));
  const ElementSet s_sq = oracle_squares(a, s_or);
  const ElementSet s_tors = oracle_two_torsion(a, s_or);
  run.oracle("symmetric_squares_order", s_sq.size());
  run.oracle("symmetric_two_torsion_order", s_tors.size());
  run.power(find_prediction(ps, "t2", "t2_proof"), set_log2(s_sq), "", t2_default == T2Variant::kProof);
  run.power(find_prediction(ps, "t2", "t2_statement"), set_log2(s_sq), "",
            t2_default == T2Variant::kStatement);
  run.power(find_prediction(ps, "t3"), set_log2(s_tors));
  run.sets("kernel_psi1_is_symmetric", oracle_kernel_psi1(a, inv), s_or);

  // Unitary units.
  const ElementSet ve_or = oracle_filter_unitary(a, inv);
  const UnitSubgroup ve_struct = unitary_units(alg, inv, Mode::kStructural);
  run.oracle("unitary_order", ve_or.size());
  run.sets("unitary_decomposition", as_set(ve_struct), ve_or);
  run.power(find_prediction(ps, "v_eta_order"), set_log2(ve_or));
  if (run.report().profile.canonical_involution) {
    run.power(find_prediction(ps, "corollary_v_star_order"), set_log2(ve_or));
  }
  const ElementSet ve_tors = oracle_two_torsion(a, ve_or);
  const ElementSet ve_sq = oracle_squares(a, ve_or);
  run.sets("symmetric_meet_unitary_is_unitary_two_torsion", oracle_intersection(s_or, ve_or), ve_tors);
  run.sets("unitary_two_torsion_is_symmetric_two_torsion", ve_tors, s_tors);

  // T(FG), V(FD)[2], W(FG).
  const UnitSubgroup t = t_subgroup(alg, inv);
  run.oracle("t_order", t.order());
  run.power(find_prediction(ps, "t_order"), t.order_log2());
  run.flag("t_elementary_abelian", is_elementary_abelian(t));

  const UnitSubgroup vd2 = two_torsion_units(alg, d);
  const ElementSet vd2_or = oracle_two_torsion(a, oracle_units(a, d));
  run.sets("fd_two_torsion", as_set(vd2), vd2_or);

  const UnitSubgroup w = w_subgroup(alg, inv);
  const ElementSet w_or = oracle_image_psi1(a, inv);
  run.oracle("w_order", w_or.size());
  run.sets("w_generated_is_psi1_image", as_set(w), w_or);
  const auto& profile = run.report().profile;
  for (std::size_t i = 0; i < profile.g_pow.size(); ++i) {
    const UnitSubgroup wi = subgroup_power(w, static_cast<int>(i));
    run.power(predict_w_power_order(profile, i), wi.order_log2());
    if (i > 0) {
      run.sets("w_of_power_is_power_of_w",
               oracle_image_psi1(a, inv, power_subgroup(g, static_cast<int>(i))), as_set(wi),
               "i=" + std::to_string(i));
    }
  }
  const ElementSet w_tors = oracle_two_torsion(a, w_or);
  run.power(find_prediction(ps, "w_two_torsion_order"), set_log2(w_tors));
  {
    ElementSet g_in_w;
    for (GroupElement x : g.elements()) {
      if (std::binary_search(w_or.begin(), w_or.end(), a.element(x))) g_in_w.push_back(a.element(x));
    }
    run.sets("group_meet_w_is_h_squared", g_in_w, group_set(a, power_subgroup(h, 1)));
  }

  // 2-torsion and the augmentation ideal.
  const ElementSet v_tors = oracle_two_torsion(a, v_or);
  {
    const auto ideal = a.ideal_basis(torsion_subgroup(g, 1));
    ElementSet one_plus_ideal{a.one()};
    AlgebraElement cur = a.one();
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << ideal.size()); ++i) {
      cur = a.add(cur, ideal[static_cast<std::size_t>(std::countr_zero(i))]);
      one_plus_ideal.push_back(cur);
    }
    std::sort(one_plus_ideal.begin(), one_plus_ideal.end());
    run.sets("two_torsion_is_one_plus_ideal", one_plus_ideal, v_tors);
  }
  run.power(find_prediction(ps, "v_two_torsion_order"), set_log2(v_tors), "oracle");
  const SubgroupOfG p = subgroup_join(torsion_subgroup(h, 1), d);
  run.power(find_prediction(ps, "p_two_torsion_order"),
            set_log2(oracle_two_torsion(a, oracle_units(a, p))), "oracle");

  // (V(FD)[2] x T) meets W trivially and the product is direct.
  const UnitSubgroup vd2_t = subgroup_product(vd2, t);
  run.compare("fd_two_torsion_times_t_direct", "log2", vd2.order_log2() + t.order_log2(),
              vd2_t.order_log2());
  run.meet("fd_two_torsion_times_t_meets_w", as_set(vd2_t), w_or, {a.one()});

  // Squares of unitary units against V(FD)[2], V(F[D1^2 x D])[2] and T(FG^2).
  run.meet("unitary_squares_meet_fd_two_torsion", ve_sq, vd2_or, {a.one()});
  const SubgroupOfG d1_sq = power_subgroup(d1_subgroup(inv), 1);
  const SubgroupOfG k = subgroup_join(d1_sq, d);
  run.meet("unitary_squares_meet_k_two_torsion", ve_sq, oracle_two_torsion(a, oracle_units(a, k)),
           group_set(a, d1_sq));
  const UnitSubgroup t2 = t2_subgroup(alg, inv);
  run.oracle("t_of_squares_order", t2.order());
  run.flag("t_of_squares_elementary_abelian", is_elementary_abelian(t2));
  run.meet("unitary_squares_meet_t_of_squares", ve_sq, as_set(t2), {a.one()});

  // Two readings of the decomposition of V_eta[2].
  const UnitSubgroup w2 = subgroup_torsion(w);
  const UnitSubgroup v2 = two_torsion_units(alg, g);
  for (const auto& [variant, first] :
       {std::pair<std::string, const UnitSubgroup*>{"fd", &vd2}, {"literal", &v2}}) {
    const bool is_default = variant == "fd";
    const UnitSubgroup prod = subgroup_product(subgroup_product(*first, w2), t);
    run.sets("unitary_two_torsion_decomposition", as_set(prod), ve_tors, variant, is_default);
    run.compare("unitary_two_torsion_direct", "log2",
                first->order_log2() + w2.order_log2() + t.order_log2(), prod.order_log2(), variant,
                is_default);
  }

  inverse_identity_checks(run, a);
  psi_identity_checks(run, a, inv);

  run.flag("v_invariants_match_basis_orders", invariants(v_gen) == basis_orders);
  invariants_entry(run, "V", v_gen, true);
  invariants_entry(run, "S", s_nf, true);
  invariants_entry(run, "V_eta", ve_struct, true);
  invariants_entry(run, "W", w, true);
  invariants_entry(run, "T", t, true);
}

void structural_checks(CaseRunner& run, std::shared_ptr<const GroupAlgebra> alg,
                       const Involution& inv, const std::vector<Prediction>& ps) {
  const GroupAlgebra& a = *alg;
  const SubgroupOfG g = SubgroupOfG::whole(inv.group());
  const SubgroupOfG h = h_subgroup(inv);
  const SubgroupOfG d = d_subgroup(inv);
  const auto& profile = run.report().profile;

  const UnitSubgroup v_gen = full_unit_group(alg, Mode::kStructural);
  const AbelianInvariants basis_orders = basis_checks(run, alg, inv, ps, v_gen);
  run.flag("v_invariants_match_basis_orders", invariants(v_gen) == basis_orders);

  const UnitSubgroup w = w_subgroup(alg, inv);
  run.oracle("w_order_log2", static_cast<std::uint64_t>(w.order_log2()));
  for (std::size_t i = 0; i < profile.g_pow.size(); ++i) {
    const UnitSubgroup wi = subgroup_power(w, static_cast<int>(i));
    run.power(predict_w_power_order(profile, i), wi.order_log2());
    if (i > 0) {
      run.subgroups("w_of_power_is_power_of_w", w_subgroup_of_power(alg, inv, static_cast<int>(i)),
                    wi, "i=" + std::to_string(i));
    }
  }
  run.power(find_prediction(ps, "w_two_torsion_order"), torsion_order_log2(w));
  run.sets("group_meet_w_is_h_squared", group_set(a, group_part(w)),
           group_set(a, power_subgroup(h, 1)));

  const UnitSubgroup t = t_subgroup(alg, inv);
  run.oracle("t_order", t.order());
  run.power(find_prediction(ps, "t_order"), t.order_log2());
  run.flag("t_elementary_abelian", is_elementary_abelian(t));
  const UnitSubgroup t2 = t2_subgroup(alg, inv);
  run.oracle("t_of_squares_order", t2.order());
  run.flag("t_of_squares_elementary_abelian", is_elementary_abelian(t2));

  const UnitSubgroup vd2 = two_torsion_units(alg, d);
  run.compare("fd_two_torsion_order", "log2", static_cast<double>(profile.d - profile.d2),
              vd2.order_log2());
  const UnitSubgroup vd2_t = subgroup_product(vd2, t);
  run.compare("fd_two_torsion_times_t_direct", "log2", vd2.order_log2() + t.order_log2(),
              vd2_t.order_log2());
  run.meet_order("fd_two_torsion_times_t_meets_w", vd2_t, w, 0);

  const UnitSubgroup ve = unitary_units(alg, inv, Mode::kStructural);
  run.oracle("unitary_order_log2", static_cast<std::uint64_t>(ve.order_log2()));
  run.power(find_prediction(ps, "v_eta_order"), ve.order_log2(), "generated");
  bool unitary = true;
  for (const auto& x : ve.generators()) unitary = unitary && a.mul(a.eta(x, inv), x) == a.one();
  run.flag("unitary_generators_are_unitary", unitary);

  inverse_identity_checks(run, a);
  psi_identity_checks(run, a, inv);

  invariants_entry(run, "V", v_gen, false);
  invariants_entry(run, "V_eta", ve, false);
  invariants_entry(run, "W", w, false);
  invariants_entry(run, "T", t, false);
}

// Side suite: only the formulas that depend on the H/D bookkeeping.
void side_checks(CaseRunner& run, const GroupAlgebra& a, const Involution& inv) {
  const GroupProfile& p = run.report().profile;
  const ElementSet s_or = oracle_filter_symmetric(a, inv);
  const ElementSet s_sq = oracle_squares(a, s_or);
  const ElementSet ve_or = oracle_filter_unitary(a, inv);
  run.oracle("symmetric_order", s_or.size());
  run.oracle("symmetric_squares_order", s_sq.size());
  run.oracle("unitary_order", ve_or.size());
  run.power(predict_t1(p), set_log2(s_or));
  const T2Variant def = run.options().t2_variant;
  run.power(predict_t2(p, T2Variant::kProof), set_log2(s_sq), "", def == T2Variant::kProof);
  run.power(predict_t2(p, T2Variant::kStatement), set_log2(s_sq), "", def == T2Variant::kStatement);
  run.power(predict_v_eta_order(p), set_log2(ve_or));
}

}  // namespace

std::vector<AbelianTwoGroup> catalog_groups(int max_order) {
  std::vector<AbelianTwoGroup> out;
  for (int n = 0; (1 << n) <= max_order; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(n, n, cur, parts);
    for (const auto& part : parts) {
      std::vector<std::uint32_t> orders;
      for (int e : part) orders.push_back(1u << e);
      out.emplace_back(orders);
    }
  }
  return out;
}

TestCase make_case(const GroupDescriptor& d) {
  if (d.group.order() > 32) {
    throw PreconditionError("verification covers |G| <= 32, got " + std::to_string(d.group.order()));
  }
  TestCase tc;
  const Involution inv = d.involution();
  tc.descriptor = GroupDescriptor{d.group, inv.h_block()};
  tc.mode = d.group.order() <= kExplicitGroupCap ? CaseMode::kExplicit : CaseMode::kStructural;
  return tc;
}

std::vector<TestCase> catalog_cases(int max_order) {
  std::vector<TestCase> out;
  for (const auto& grp : catalog_groups(max_order)) {
    std::set<ProfileKey> seen;
    for (const auto& raw : subsets(grp.rank())) {
      const Involution inv = Involution::canonicalized(grp, raw);
      if (!seen.insert(profile_key(inv)).second) continue;
      out.push_back(make_case(GroupDescriptor{grp, raw}));
    }
  }
  return out;
}

std::vector<TestCase> noncanonical_cases(int max_order) {
  std::vector<TestCase> out;
  for (const auto& grp : catalog_groups(std::min<int>(max_order, kExplicitGroupCap))) {
    std::set<ProfileKey> seen;
    for (const auto& raw : subsets(grp.rank())) {
      const Involution inv = Involution::uncanonicalized(grp, raw);
      if (inv.h_block() == Involution::canonicalized(grp, raw).h_block()) continue;
      if (!seen.insert(profile_key(inv)).second) continue;
      TestCase tc;
      tc.descriptor = GroupDescriptor{grp, raw};
      tc.mode = CaseMode::kExplicit;
      tc.canonicalized = false;
      out.push_back(tc);
    }
  }
  return out;
}

CaseReport run_case(const TestCase& tc, const HarnessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CaseReport report;
  report.test_case = tc;
  try {
    const Involution inv = tc.involution();
    const auto alg = std::make_shared<const GroupAlgebra>(tc.descriptor.group);
    report.profile = make_profile(inv);
    CaseRunner run(report, options);
    if (!tc.canonicalized) {
      side_checks(run, *alg, inv);
    } else {
      report.predictions = all_predictions(report.profile);
      group_level_checks(run, *alg, inv, report.predictions);
      if (tc.mode == CaseMode::kExplicit) {
        explicit_checks(run, alg, inv, report.predictions, options.t2_variant);
      } else {
        structural_checks(run, alg, inv, report.predictions);
      }
    }
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

T2Resolution resolve_t2(const std::vector<CaseReport>& cases,
                        const std::vector<CaseReport>& side_cases) {
  T2Resolution res;
  const auto scan = [&](const std::vector<CaseReport>& reports) {
    for (const auto& c : reports) {
      bool seen = false;
      for (const auto& f : c.formula_checks) {
        if (f.name != "t2") continue;
        seen = true;
        if (f.pass) continue;
        (f.variant == "t2_statement" ? res.statement_disagrees : res.proof_disagrees)
            .push_back(c.test_case.name() + (c.test_case.canonicalized ? "" : " (noncanonical)"));
      }
      if (seen) ++res.cases_compared;
    }
  };
  scan(cases);
  scan(side_cases);
  if (res.statement_disagrees.empty() && res.proof_disagrees.empty()) {
    res.verdict = "both t2 variants agree with the oracle on every compared case";
  } else if (res.proof_disagrees.empty()) {
    res.verdict = "t2_proof agrees with the oracle on every compared case; t2_statement disagrees on " +
                  std::to_string(res.statement_disagrees.size()) + " case(s)";
  } else if (res.statement_disagrees.empty()) {
    res.verdict = "t2_statement agrees with the oracle on every compared case; t2_proof disagrees on " +
                  std::to_string(res.proof_disagrees.size()) + " case(s)";
  } else {
    res.verdict = "both t2 variants disagree with the oracle on some cases";
  }
  return res;
}

VerificationReport run_cases(const std::vector<TestCase>& cases, const HarnessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.options = options;
  std::set<std::string> groups;
  for (const auto& tc : cases) {
    if (groups.insert(tc.descriptor.group.to_string()).second) {
      report.groups.push_back(tc.descriptor.group.to_string());
      ++(tc.mode == CaseMode::kExplicit ? report.explicit_groups : report.structural_groups);
    }
    report.cases.push_back(run_case(tc, options));
  }
  if (options.include_noncanonical) {
    for (const auto& tc : noncanonical_cases(options.max_order)) {
      const bool wanted = std::any_of(cases.begin(), cases.end(), [&](const TestCase& c) {
        return c.descriptor.group == tc.descriptor.group;
      });
      if (wanted) report.side_cases.push_back(run_case(tc, options));
    }
  }
  report.t2_resolution = resolve_t2(report.cases, report.side_cases);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport run_catalog(const HarnessOptions& options) {
  return run_cases(catalog_cases(options.max_order), options);
}

}  // namespace f2units
