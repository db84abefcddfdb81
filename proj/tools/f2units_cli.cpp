// f2units: construction, computation and verification for the unit group of
// F2[G] with an involution.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error.

#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "f2units/descriptor.hpp"
#include "f2units/errors.hpp"
#include "f2units/harness.hpp"
#include "f2units/report.hpp"
#include "f2units/units.hpp"

namespace {

using namespace f2units;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string alpha_text(const std::vector<std::uint32_t>& alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s + ")";
}

std::shared_ptr<const GroupAlgebra> algebra_for(const GroupDescriptor& d) {
  if (d.group.order() > GroupAlgebra::kMaxOrder) {
    throw UsageError("unit computations need |G| <= 64, got " + std::to_string(d.group.order()));
  }
  return std::make_shared<const GroupAlgebra>(d.group);
}

struct VerifyArgs {
  std::string descriptor;
  int max_order = 32;
  bool json = false;
  bool csv = false;
  std::string variant = "t2_proof";
  bool include_noncanonical = false;
  bool verbose = false;
};

int cmd_verify(const VerifyArgs& a) {
  HarnessOptions opt;
  opt.max_order = a.max_order;
  opt.t2_variant = a.variant == "t2_statement" ? T2Variant::kStatement : T2Variant::kProof;
  opt.include_noncanonical = a.include_noncanonical;
  VerificationReport r;
  if (a.descriptor.empty()) {
    if (a.max_order < 1 || a.max_order > 32) throw UsageError("--max-order must be in 1..32");
    r = run_catalog(opt);
  } else {
    const GroupDescriptor d = parse_descriptor(a.descriptor);
    if (d.group.order() > 32) throw UsageError("verify covers |G| <= 32");
    opt.max_order = static_cast<int>(d.group.order());
    r = run_cases({make_case(d)}, opt);
  }
  if (a.json) {
    std::cout << report_to_json(r).dump(2) << '\n';
  } else if (a.csv) {
    std::cout << report_to_csv(r);
  } else {
    std::cout << report_to_text(r, a.verbose);
  }
  return r.pass() ? kExitPass : kExitFail;
}

int cmd_basis(const std::string& descriptor, bool json) {
  const GroupDescriptor d = parse_descriptor(descriptor);
  const auto alg = algebra_for(d);
  const Involution inv = d.involution();
  const IndexSets sets = sandling_index_sets(inv);
  std::vector<std::uint64_t> orders;
  Json units = Json::array();
  std::ostringstream text;
  for (const auto& iv : sets.l) {
    const AlgebraElement u = basis_unit(*alg, iv.alpha);
    const std::uint64_t computed = unit_order(*alg, u);
    const std::uint32_t formula = unit_order_formula(d.group, iv.alpha);
    orders.push_back(computed);
    units.push_back({{"alpha", iv.alpha},
                     {"unit", alg->to_string(u)},
                     {"order_formula", formula},
                     {"order_computed", computed}});
    text << "u_" << alpha_text(iv.alpha) << " = " << alg->to_string(u) << "  order " << computed
         << " (formula " << formula << ")\n";
  }
  const AbelianInvariants inv_v = invariants_from_factor_orders(orders);
  if (json) {
    std::cout << Json{{"group", format_descriptor(d)},
                      {"basis", units},
                      {"invariants", inv_v.cyclic_orders}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << text.str() << "invariants " << inv_v.to_string() << '\n';
  }
  return kExitPass;
}

struct ComputeArgs {
  std::string descriptor;
  std::string subgroup = "V_eta";
  bool invariants = false;
  bool order_only = false;
  bool dump = false;
  bool json = false;
};

UnitSubgroup build_subgroup(const std::shared_ptr<const GroupAlgebra>& alg, const Involution& inv,
                            const std::string& name) {
  const SubgroupOfG g = SubgroupOfG::whole(inv.group());
  if (name == "V") return full_unit_group(alg, Mode::kStructural);
  if (name == "S") return symmetric_units(alg, inv);
  if (name == "V_eta") return unitary_units(alg, inv, Mode::kStructural);
  if (name == "W") return w_subgroup(alg, inv);
  if (name == "T") return t_subgroup(alg, inv);
  if (name == "T2") return t2_subgroup(alg, inv);
  if (name == "V2") return two_torsion_units(alg, g);
  if (name == "VD2") return two_torsion_units(alg, d_subgroup(inv));
  throw UsageError("unknown subgroup " + name);
}

int cmd_compute(const ComputeArgs& a) {
  const GroupDescriptor d = parse_descriptor(a.descriptor);
  const auto alg = algebra_for(d);
  if (d.group.order() > kExplicitGroupCap && !a.order_only) {
    throw UsageError("|G| = " + std::to_string(d.group.order()) +
                     " is past the explicit-mode cap of 16; pass --order-only");
  }
  const UnitSubgroup sub = build_subgroup(alg, d.involution(), a.subgroup);
  const bool dump = a.dump && !a.order_only;
  if (a.json) {
    Json j{{"group", format_descriptor(d)}, {"subgroup", a.subgroup}};
    j.update(export_subgroup(sub, dump));
    std::cout << j.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << a.subgroup << " in F2[" << format_descriptor(d) << "]\n";
  std::cout << "order 2^" << sub.order_log2();
  if (sub.order_log2() < 63) std::cout << " = " << sub.order();
  std::cout << '\n';
  if (a.invariants) std::cout << "invariants " << invariants(sub).to_string() << '\n';
  if (dump) {
    for (const auto& x : sub.elements()) std::cout << "  " << alg->to_string(x) << '\n';
  }
  return kExitPass;
}

int cmd_report(const std::string& out, int max_order, bool include_noncanonical) {
  HarnessOptions opt;
  opt.max_order = max_order;
  opt.include_noncanonical = include_noncanonical;
  const VerificationReport r = run_catalog(opt);
  write_report_dir(r, out);
  std::cerr << "wrote " << out << "/report.json, summary.csv, formula_ledger.md\n";
  std::cout << report_to_text(r, false);
  return r.pass() ? kExitPass : kExitFail;
}

int cmd_list_groups(int max_order) {
  for (const auto& tc : catalog_cases(max_order)) {
    std::cout << tc.name() << '\t' << to_string(tc.mode) << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit groups of F2[G] for abelian 2-groups with an involution"};
  app.require_subcommand(1, 1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run the verification harness on one case or the catalog");
  v->add_option("descriptor", verify.descriptor, "group descriptor such as 4x2:inv=1 (default: whole catalog)");
  v->add_option("--max-order", verify.max_order, "largest |G| in the catalog")->check(CLI::Range(1, 32));
  v->add_flag("--json", verify.json, "print the JSON report");
  v->add_flag("--csv", verify.csv, "print the CSV summary");
  v->add_option("--variant", verify.variant, "t2 variant counted toward the status")
      ->check(CLI::IsMember({"t2_proof", "t2_statement"}));
  v->add_flag("--include-noncanonical", verify.include_noncanonical,
              "also run the side suite with order-2 generators kept inverted");
  v->add_flag("-v,--verbose", verify.verbose, "list invariants and non-default outcomes");

  std::string basis_descriptor;
  bool basis_json = false;
  auto* b = app.add_subcommand("basis", "print the Sandling basis of V(FG) with orders");
  b->add_option("descriptor", basis_descriptor, "group descriptor")->required();
  b->add_flag("--json", basis_json, "print JSON");

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "order, invariants and elements of a unit subgroup");
  c->add_option("descriptor", compute.descriptor, "group descriptor")->required();
  c->add_option("--subgroup", compute.subgroup, "V, S, V_eta, W, T, T2, V2 or VD2")
      ->check(CLI::IsMember({"V", "S", "V_eta", "W", "T", "T2", "V2", "VD2"}));
  c->add_flag("--invariants", compute.invariants, "print the cyclic invariants");
  c->add_flag("--order-only", compute.order_only, "skip element lists; allows |G| > 16");
  c->add_flag("--dump", compute.dump, "print every element");
  c->add_flag("--json", compute.json, "print the subgroup export JSON");

  std::string report_out;
  int report_max_order = 32;
  bool report_noncanonical = true;
  auto* r = app.add_subcommand("report", "run the catalog and write report files");
  r->add_option("--out", report_out, "output directory")->required();
  r->add_option("--max-order", report_max_order, "largest |G|")->check(CLI::Range(1, 32));
  r->add_flag("--include-noncanonical,!--no-noncanonical", report_noncanonical,
              "run the side suite (default on)");

  int list_max_order = 32;
  auto* l = app.add_subcommand("list-groups", "list the catalog cases");
  l->add_option("--max-order", list_max_order, "largest |G|")->check(CLI::Range(1, 32));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*v) return cmd_verify(verify);
    if (*b) return cmd_basis(basis_descriptor, basis_json);
    if (*c) return cmd_compute(compute);
    if (*r) return cmd_report(report_out, report_max_order, report_noncanonical);
    if (*l) return cmd_list_groups(list_max_order);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
