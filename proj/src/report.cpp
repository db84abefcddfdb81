#include "f2units/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "f2units/errors.hpp"

namespace f2units {

using Json = nlohmann::ordered_json;

namespace {

Json number(double x) {
  if (std::floor(x) == x && std::fabs(x) < 9e15) return static_cast<std::int64_t>(x);
  return x;
}

std::string two_decimals(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

Json profile_json(const GroupProfile& p) {
  return Json{{"group", p.group},
              {"G", p.g},
              {"G2", p.g2},
              {"G_tors2", p.g_tors2},
              {"G2_tors2", p.g2_tors2},
              {"H", p.h},
              {"H_tors2", p.h_tors2},
              {"H_tors4", p.h_tors4},
              {"H2_tors2", p.h2_tors2},
              {"D", p.d},
              {"D2", p.d2},
              {"G_eta", p.g_eta},
              {"G_pow", p.g_pow},
              {"H_pow_tors2", p.h_pow_tors2},
              {"D_pow", p.d_pow},
              {"H_orders", p.h_orders},
              {"D_orders", p.d_orders},
              {"canonicalized", p.canonicalized},
              {"canonical_involution", p.canonical_involution}};
}

Json prediction_json(const Prediction& p) {
  Json j{{"name", p.name},
         {"variant", p.variant},
         {"kind", p.kind == Prediction::Kind::kPower ? "power" : "count"},
         {"exponent", number(p.exponent())}};
  const auto v = p.value();
  j["value"] = v ? Json(*v) : Json(nullptr);
  return j;
}

std::string status(const CaseReport& c) {
  if (!c.error.empty()) return "error";
  return c.pass() ? "pass" : "fail";
}

std::vector<std::string> nondefault_failures(const CaseReport& c) {
  std::vector<std::string> out;
  for (const auto& f : c.formula_checks) {
    if (!f.is_default && !f.pass) out.push_back(f.name + "/" + f.variant);
  }
  for (const auto& s : c.set_checks) {
    if (!s.is_default && !s.degenerate && !s.equal) out.push_back(s.name + "/" + s.variant);
  }
  return out;
}

std::size_t passed_cases(const std::vector<CaseReport>& cases) {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass() ? 1 : 0;
  return n;
}

std::string escape_bars(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

Json case_to_json(const CaseReport& c) {
  const Involution inv = c.test_case.involution();
  Json j;
  j["case"] = c.test_case.name();
  j["group"] = c.test_case.descriptor.group.to_string();
  j["involution"] = Json{{"descriptor", format_descriptor(inv)},
                         {"canonicalized", c.test_case.canonicalized},
                         {"h_block", inv.h_block()},
                         {"d_block", inv.d_block()}};
  j["mode"] = to_string(c.test_case.mode);
  j["profile"] = profile_json(c.profile);

  Json preds = Json::array();
  for (const auto& p : c.predictions) preds.push_back(prediction_json(p));
  j["predictions"] = preds;

  Json oracle = Json::array();
  for (const auto& o : c.oracle) oracle.push_back({{"name", o.name}, {"value", o.value}});
  j["oracle"] = oracle;

  Json sets = Json::array();
  for (const auto& s : c.set_checks) {
    sets.push_back({{"name", s.name},
                    {"variant", s.variant},
                    {"lhs_order", s.lhs_order_log2 < 0 ? Json(nullptr) : Json(std::uint64_t{1} << s.lhs_order_log2)},
                    {"rhs_order", s.rhs_order_log2 < 0 ? Json(nullptr) : Json(std::uint64_t{1} << s.rhs_order_log2)},
                    {"equal", s.equal},
                    {"degenerate", s.degenerate},
                    {"default", s.is_default}});
  }
  j["set_checks"] = sets;

  Json formulas = Json::array();
  for (const auto& f : c.formula_checks) {
    formulas.push_back({{"name", f.name},
                        {"variant", f.variant},
                        {"scale", f.scale},
                        {"predicted", number(f.predicted)},
                        {"observed", number(f.observed)},
                        {"pass", f.pass},
                        {"default", f.is_default}});
  }
  j["formula_checks"] = formulas;

  Json ids = Json::array();
  for (const auto& i : c.identity_checks) {
    ids.push_back({{"name", i.name}, {"applicable", i.applicable}, {"passed", i.passed}});
  }
  j["identity_checks"] = ids;

  Json inv_json = Json::object();
  for (const auto& [name, text] : c.invariants) inv_json[name] = text;
  j["invariants"] = inv_json;

  j["status"] = status(c);
  j["failures"] = c.failures();
  j["nondefault_failures"] = nondefault_failures(c);
  if (!c.error.empty()) j["error"] = c.error;
  j["elapsed_ms"] = std::round(c.elapsed_ms * 100) / 100;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["tool"] = "f2units";
  j["catalog"] = Json{{"max_order", r.options.max_order},
                      {"group_count", r.groups.size()},
                      {"explicit_groups", r.explicit_groups},
                      {"structural_groups", r.structural_groups},
                      {"groups", r.groups},
                      {"case_count", r.cases.size()},
                      {"side_case_count", r.side_cases.size()}};
  j["options"] = Json{{"t2_variant", to_string(r.options.t2_variant)},
                      {"include_noncanonical", r.options.include_noncanonical},
                      {"psi_samples", r.options.psi_samples},
                      {"seed", r.options.seed}};
  j["readings"] = Json{
      {"l3", "alpha ranges over the L1 set of G^2: exponents in {0, q_i/2 - 1} on the squares "
             "of the generators of order >= 8, applied to (a_i^2 + 1)"},
      {"unitary_two_torsion_decomposition",
       "default variant fd uses V(FD)[2]; variant literal uses V(FG)[2] and is reported but "
       "not counted toward the status"},
      {"t2_default", to_string(r.options.t2_variant)}};

  std::size_t checks = 0;
  std::vector<std::string> failed;
  for (const auto& c : r.cases) {
    checks += c.check_count();
    if (!c.pass()) failed.push_back(c.test_case.name());
  }
  j["summary"] = Json{{"status", r.pass() ? "pass" : "fail"},
                      {"cases", r.cases.size()},
                      {"passed", passed_cases(r.cases)},
                      {"failed", r.cases.size() - passed_cases(r.cases)},
                      {"checks", checks},
                      {"failed_cases", failed}};
  j["t2_resolution"] = Json{{"cases_compared", r.t2_resolution.cases_compared},
                            {"statement_disagrees", r.t2_resolution.statement_disagrees},
                            {"proof_disagrees", r.t2_resolution.proof_disagrees},
                            {"verdict", r.t2_resolution.verdict}};
  Json ledger = Json::array();
  for (const auto& e : formula_ledger()) {
    ledger.push_back({{"id", e.id}, {"claim", e.claim}, {"expression", e.expression}});
  }
  j["formula_ledger"] = ledger;

  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(case_to_json(c));
  j["cases"] = cases;
  Json side = Json::array();
  for (const auto& c : r.side_cases) side.push_back(case_to_json(c));
  j["side_cases"] = side;
  j["elapsed_ms"] = std::round(r.elapsed_ms * 100) / 100;
  return j;
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "case,suite,mode,status,checks,failed,elapsed_ms\n";
  const auto rows = [&](const std::vector<CaseReport>& cases, const char* suite) {
    for (const auto& c : cases) {
      os << '"' << c.test_case.name() << "\"," << suite << ',' << to_string(c.test_case.mode) << ','
         << status(c) << ',' << c.check_count() << ',' << c.failures().size() << ','
         << two_decimals(c.elapsed_ms) << '\n';
    }
  };
  rows(r.cases, "catalog");
  rows(r.side_cases, "noncanonical");
  return os.str();
}

std::string report_to_text(const VerificationReport& r, bool verbose) {
  std::ostringstream os;
  os << "groups: " << r.groups.size() << " (" << r.explicit_groups << " explicit, "
     << r.structural_groups << " structural), cases: " << r.cases.size() << "\n\n";
  os << std::left << std::setw(22) << "case" << std::setw(12) << "mode" << std::setw(8) << "status"
     << std::right << std::setw(8) << "checks" << std::setw(11) << "ms" << '\n';
  for (const auto& c : r.cases) {
    os << std::left << std::setw(22) << c.test_case.name() << std::setw(12)
       << to_string(c.test_case.mode) << std::setw(8) << status(c) << std::right << std::setw(8)
       << c.check_count() << std::setw(11) << two_decimals(c.elapsed_ms) << '\n';
    for (const auto& f : c.failures()) os << "    FAIL " << f << '\n';
    if (verbose) {
      for (const auto& f : nondefault_failures(c)) os << "    note: non-default " << f << " fails\n";
      for (const auto& [name, text] : c.invariants) os << "    " << name << " invariants " << text << '\n';
    }
  }
  if (!r.side_cases.empty()) {
    os << "\nnoncanonical side suite:\n";
    for (const auto& c : r.side_cases) {
      os << "  " << std::left << std::setw(20) << c.test_case.name();
      for (const auto& f : c.formula_checks) {
        if (f.name == "t2") os << ' ' << f.variant << '=' << (f.pass ? "ok" : "differs");
      }
      os << '\n';
    }
  }
  os << "\nt2: " << r.t2_resolution.verdict << '\n';
  os << "summary: " << passed_cases(r.cases) << "/" << r.cases.size() << " cases pass, "
     << (r.pass() ? "PASS" : "FAIL") << " (" << two_decimals(r.elapsed_ms / 1000.0) << " s)\n";
  return os.str();
}

Json export_subgroup(const UnitSubgroup& a, bool with_elements) {
  Json j;
  j["order"] = "2^" + std::to_string(a.order_log2());
  j["order_log2"] = a.order_log2();
  j["invariants"] = invariants(a).cyclic_orders;
  if (with_elements) {
    Json els = Json::array();
    for (const auto& x : a.elements()) els.push_back(a.algebra().to_string(x));
    j["elements"] = els;
  }
  return j;
}

void write_report_dir(const VerificationReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto write = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name);
    if (!out) throw Error("cannot write " + (dir / name).string());
    out << text;
  };
  write("report.json", report_to_json(r).dump(2) + "\n");
  write("summary.csv", report_to_csv(r));
  std::ostringstream md;
  md << "| id | claim | expression |\n|---|---|---|\n";
  for (const auto& e : formula_ledger()) {
    md << "| " << escape_bars(e.id) << " | " << escape_bars(e.claim) << " | "
       << escape_bars(e.expression) << " |\n";
  }
  write("formula_ledger.md", md.str());
}

}  // namespace f2units
