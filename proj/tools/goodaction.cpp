// Command-line driver: verify, check-good, info, example32.
//
// Exit codes: 0 verified, 1 a conclusion or golden clause failed,
// 2 invalid input or manifest, 3 a resource bound was exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "goodaction/harness.hpp"

using namespace goodaction;

namespace {

constexpr int kOk = 0, kFailed = 1, kBadInput = 2, kBound = 3;

int code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::OrderBoundExceeded:
    case ErrorKind::IndexBoundExceeded:
      return kBound;
    case ErrorKind::InvalidArgument:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::NotAnAutomorphism:
    case ErrorKind::NotAHomomorphism:
    case ErrorKind::RelationViolated:
    case ErrorKind::NotLinearCharacter:
    case ErrorKind::NotASubgroup:
    case ErrorKind::NotNormal:
      return kBadInput;
    default:
      return kFailed;
  }
}

void print_report_lines(const TheoremReport& r) {
  std::cout << "  " << std::left << std::setw(15) << r.theorem << std::setw(15) << to_string(r.verdict);
  if (!r.failed_hypothesis.empty()) std::cout << "failed: " << r.failed_hypothesis;
  if (!r.detail.empty()) std::cout << (r.failed_hypothesis.empty() ? "" : "; ") << r.detail;
  std::cout << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
}

int cmd_verify(const std::string& corpus, const std::vector<std::string>& theorems, unsigned jobs, std::uint64_t seed,
               const std::string& report_path) {
  const Manifest m = load_manifest(corpus);
  RunOptions opt;
  opt.theorems = theorems;
  opt.jobs = jobs;
  opt.seed = seed;
  opt.corpus_name = std::filesystem::path(corpus).filename().string();
  const RunResult rr = run_manifest(m, opt);
  {
    std::ofstream out(report_path);
    require(static_cast<bool>(out), ErrorKind::InvalidArgument, "cannot write report " + report_path);
    out << rr.report.dump(2) << "\n";
  }
  for (const auto& ir : rr.instances) {
    std::cout << ir.id << "  (" << std::fixed << std::setprecision(2) << ir.seconds << " s)\n";
    for (const auto& r : ir.reports) {
      print_report_lines(r);
      if (r.theorem == "goodness" && r.verdict == Verdict::Violated && r.witnesses.contains("b"))
        std::cout << "    witness: B " << r.witnesses["b"].dump() << ", H " << r.witnesses["h"].dump()
                  << ", |[H,B]| = " << r.witnesses["commutator_hb_order"] << ", |C_H(B)| = "
                  << r.witnesses["centralizer_hb_order"] << "\n";
    }
  }
  const auto& s = rr.report["summary"];
  std::cout << "summary: " << s["holds"] << " hold, " << s["violated"] << " violated, " << s["not_applicable"]
            << " not applicable, " << s["error"] << " errors; report written to " << report_path << "\n";
  return rr.exit_code;
}

int cmd_check_good(const std::string& g_expr, const std::string& a_expr, const std::string& action) {
  auto g = parse_group(g_expr);
  auto a = parse_group(a_expr);
  auto act = parse_action(g, a, action);
  const auto rep = is_good(act);
  std::cout << "G order " << g->order() << ", A order " << a->order() << ", GA order " << act.ga()->order() << "\n";
  std::cout << "prop23 criterion: " << (prop23_criterion(act) ? "yes" : "no") << "\n";
  std::cout << "good: " << (rep.good ? "yes" : "no") << " (" << rep.pairs_checked << " pairs checked)\n";
  if (!rep.good) {
    std::cout << "witness B: " << subgroup_json(*rep.witness_b).dump() << "\n";
    std::cout << "witness H: " << subgroup_json(*rep.witness_h).dump() << "\n";
    std::cout << "|[H,B]| = " << rep.commutator_hb->size() << ", |C_H(B)| = " << rep.centralizer_hb->size()
              << ", |[H,B]C_H(B)| = " << rep.product_size << "\n";
  }
  return rep.good ? kOk : kFailed;
}

int cmd_info(const std::string& g_expr) {
  auto g = parse_group(g_expr);
  std::cout << "expression: " << parse_term(g_expr).canonical() << "\n";
  std::cout << "order: " << g->order() << "\n";
  std::cout << "generators: " << Json(g->generators()).dump() << "\n";
  std::cout << "conjugacy classes: " << g->classes().size() << "\n";
  std::cout << "center order: " << center(g).size() << "\n";
  std::cout << "abelian: " << (g->is_abelian() ? "yes" : "no") << ", nilpotent: " << (is_nilpotent(g) ? "yes" : "no")
            << ", solvable: " << (is_solvable(g) ? "yes" : "no") << "\n";
  std::cout << "exponent: " << exponent(g) << "\n";
  if (is_solvable(g)) {
    const auto fd = fitting_series(g);
    std::cout << "Fitting series orders:";
    for (const auto& s : fd.series) std::cout << " " << s.size();
    std::cout << "\nFitting height: " << fd.height << "\n";
  }
  const auto subs = all_subgroups(g);
  std::cout << "subgroups: " << subs.size() << ", normal subgroups: " << normal_subgroups(g).size() << "\n";
  return kOk;
}

int cmd_example32(const std::string& report_path) {
  const auto r = verify_example_3_2();
  for (const auto& c : r.witnesses["clauses"])
    std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["clause"].get<std::string>()
              << (c.contains("detail") ? "  [" + c["detail"].get<std::string>() + "]" : "") << "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    require(static_cast<bool>(out), ErrorKind::InvalidArgument, "cannot write report " + report_path);
    out << r.to_json().dump(2) << "\n";
  }
  std::cout << "example32: " << to_string(r.verdict) << "\n";
  return r.verdict == Verdict::Holds ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group actions: goodness, Fitting heights, towers and theorem checks"};
  app.require_subcommand(1);

  std::string corpus, report;
  std::vector<std::string> theorems;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "verify a corpus manifest");
  verify->add_option("--corpus", corpus, "manifest file")->required();
  verify->add_option("--theorems", theorems, "theorem ids (comma-separated)")->delimiter(',');
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for randomized steps");
  verify->add_option("--report", report, "JSON report path")->required();

  std::string g_expr, a_expr, action;
  auto* check = app.add_subcommand("check-good", "decide goodness of one action");
  check->add_option("--g", g_expr, "group expression for G")->required();
  check->add_option("--a", a_expr, "group expression for A")->required();
  check->add_option("--action", action, "action spec")->required();

  std::string info_expr;
  auto* info = app.add_subcommand("info", "orders, Fitting series and subgroup counts");
  info->add_option("--g", info_expr, "group expression")->required();

  std::string golden_report;
  auto* ex32 = app.add_subcommand("example32", "golden reconstruction of the order-189 example");
  ex32->add_option("--report", golden_report, "optional JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify) return cmd_verify(corpus, theorems, jobs, seed, report);
    if (*check) return cmd_check_good(g_expr, a_expr, action);
    if (*info) return cmd_info(info_expr);
    if (*ex32) return cmd_example32(golden_report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kBadInput;
}
