// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>

#include "goodaction/enumerate.hpp"
#include "goodaction/harness.hpp"
#include "oracle.hpp"

using namespace goodaction;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << "  [" << o.detail << "]"
            << std::endl;
}

std::vector<InstanceData> plain_instances(const Manifest& m) {
  std::vector<InstanceData> out;
  for (const auto& ci : m.instances)
    if (!ci.affine) out.push_back(build_instance(ci, Bounds{}, 1));
  return out;
}

std::size_t count(const RunResult& rr, const std::string& thm, Verdict v, const std::function<bool(const Json&)>& pick) {
  std::size_t n = 0;
  for (const auto& inst : rr.report["instances"])
    for (const auto& r : inst["reports"])
      if (r["theorem"] == thm && r["verdict"] == to_string(v) && pick(inst)) ++n;
  return n;
}

}  // namespace

int main() {
  const Manifest m = load_manifest(GOODACTION_CORPUS);
  auto insts = plain_instances(m);

  report(1, "order-189 golden reconstruction", [] {
    const auto t0 = Clock::now();
    const auto r = verify_example_3_2();
    const double s = since(t0);
    std::size_t passed = 0, total = 0;
    for (const auto& c : r.witnesses["clauses"]) {
      ++total;
      passed += c["pass"].get<bool>();
    }
    return Outcome{r.verdict == Verdict::Holds && s < 10,
                   std::to_string(passed) + "/" + std::to_string(total) + " clauses, " + std::to_string(s) + " s"};
  });

  report(2, "goodness: inversion on C4 is not good; coprime instances are good", [&] {
    const auto t0 = Clock::now();
    auto g = cyclic(4), a = cyclic(2);
    const Action inv = parse_action(g, a, "inv");
    const auto w = is_good(inv);
    const bool witness_ok = !w.good && w.witness_b->is_whole() && w.witness_h->is_whole() &&
                            w.commutator_hb->size() == 2 && w.centralizer_hb->size() == 2;
    std::size_t coprime = 0, good = 0;
    for (auto& d : insts) {
      const Action& act = d.action();
      if (act.ga()->order() > 400 || std::gcd(act.g()->order(), act.a()->order()) != 1) continue;
      ++coprime;
      good += is_good(act).good;
    }
    const double s = since(t0);
    return Outcome{witness_ok && coprime >= 30 && good == coprime && s < 120,
                   "witness B=A, H=C4 " + std::string(witness_ok ? "found" : "missing") + "; " + std::to_string(good) +
                       "/" + std::to_string(coprime) + " coprime good; " + std::to_string(s) + " s"};
  });

  report(3, "exhaustive sweep: the commutator criterion implies goodness (|GA| <= 120)", [&] {
    std::set<std::pair<std::string, std::string>> pairs;
    for (auto& d : insts)
      if (d.action().ga()->order() <= 120) pairs.insert({d.spec.g, d.spec.a});
    std::size_t actions = 0, crit = 0, bad = 0;
    for (const auto& [ge, ae] : pairs) {
      auto g = parse_group(ge), a = parse_group(ae);
      for (const auto& c : all_actions(g, a)) {
        const Action act = parse_action(g, a, c.spec);
        ++actions;
        if (!prop23_criterion(act)) continue;
        ++crit;
        bad += !is_good(act).good;
      }
    }
    return Outcome{bad == 0 && crit > 0, std::to_string(pairs.size()) + " pairs, " + std::to_string(actions) +
                                             " actions, " + std::to_string(crit) + " meet the criterion, " +
                                             std::to_string(bad) + " counterexamples"};
  });

  report(4, "invariant Hall subgroups for good actions of nilpotent A", [&] {
    std::size_t instances = 0, sigmas = 0, missing = 0;
    for (auto& d : insts) {
      const Action& act = d.action();
      if (!is_nilpotent(act.a()) || !is_solvable(act.g()) || !is_good(act).good) continue;
      ++instances;
      for (const auto& sigma : prime_set(act.g()).nonempty_subsets()) {
        ++sigmas;
        auto h = invariant_hall(act, sigma);
        if (!h || h->size() != sigma.part(act.g()->order()) || !act.is_invariant(*h)) ++missing;
      }
    }
    return Outcome{missing == 0 && instances > 0, std::to_string(instances) + " instances, " + std::to_string(sigmas) +
                                                      " prime sets, " + std::to_string(missing) + " missing"};
  });

  report(5, "A-towers of height h(G) for good actions of nilpotent A", [&] {
    std::size_t found = 0, exhaustive = 0, wrong = 0;
    for (auto& d : insts) {
      const Action& act = d.action();
      const std::size_t n = act.g()->order();
      if (n > 200 || !is_solvable(act.g()) || !is_nilpotent(act.a()) || !is_good(act).good) continue;
      const std::size_t h = fitting_height(act.g());
      const auto t = find_tower(act);
      ++found;
      if (t.height() != h || !verify_tower(act, t).ok()) ++wrong;
      if (n <= 100) {
        ++exhaustive;
        if (exhaustive_tower(act).height() != h) ++wrong;
      }
    }
    return Outcome{wrong == 0 && found > 0, std::to_string(found) + " towers, " + std::to_string(exhaustive) +
                                                " exhaustive confirmations, " + std::to_string(wrong) + " mismatches"};
  });

  report(6, "Fitting heights of C6, S3, S4 against a permutation oracle", [] {
    using oracle::cycle;
    const int o6 = oracle::fitting_height(oracle::generate({cycle(6, {0, 1, 2, 3, 4, 5})}, 6));
    const int o3 = oracle::fitting_height(oracle::generate({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3));
    const int o4 = oracle::fitting_height(oracle::generate({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})}, 4));
    const auto h6 = fitting_height(cyclic(6)), h3 = fitting_height(symmetric(3)), h4 = fitting_height(symmetric(4));
    const bool ok = o6 == 1 && o3 == 2 && o4 == 3 && static_cast<int>(h6) == o6 && static_cast<int>(h3) == o3 &&
                    static_cast<int>(h4) == o4;
    return Outcome{ok, "h = " + std::to_string(h6) + ", " + std::to_string(h3) + ", " + std::to_string(h4) +
                           "; oracle " + std::to_string(o6) + ", " + std::to_string(o3) + ", " + std::to_string(o4)};
  });

  report(7, "affine SL(2,3) over GF(5)^2 pipeline", [&] {
    for (const auto& ci : m.instances) {
      if (!ci.affine) continue;
      const auto t0 = Clock::now();
      auto d = build_instance(ci, Bounds{}, 1);
      const auto r = run_theorem("example_1", d);
      const double s = since(t0);
      return Outcome{r.verdict == Verdict::Holds && s < 300,
                     ci.id + ": " + to_string(r.verdict) + (r.detail.empty() ? "" : " (" + r.detail + ")") + ", " +
                         std::to_string(s) + " s"};
    }
    return Outcome{false, "no affine instance in the corpus"};
  });

  RunResult full;
  bool full_ok = true;
  try {
    RunOptions opt;
    opt.jobs = 4;
    opt.corpus_name = "corpus.json";
    full = run_manifest(m, opt);
  } catch (const std::exception& e) {
    full_ok = false;
    std::cout << "corpus run failed: " << e.what() << std::endl;
  }

  report(8, "theorems with applicable instances; inapplicable ones name the failed hypothesis", [&] {
    if (!full_ok) return Outcome{false, "corpus run failed"};
    const auto any = [](const Json&) { return true; };
    bool ok = true;
    std::string detail;
    for (const char* t : {"thm_2_9", "thm_2_10", "thm_4_2", "thm_4_4", "thm_4_5"}) {
      const auto holds = count(full, t, Verdict::Holds, any);
      const auto bad = count(full, t, Verdict::Violated, any) + count(full, t, Verdict::Error, any);
      ok = ok && holds >= 5 && bad == 0;
      detail += std::string(detail.empty() ? "" : ", ") + t + " " + std::to_string(holds);
      if (bad) detail += " (" + std::to_string(bad) + " failed)";
    }
    std::size_t unnamed = 0;
    for (const auto& ir : full.instances)
      for (const auto& r : ir.reports)
        if (r.verdict == Verdict::NotApplicable && r.failed_hypothesis.empty()) ++unnamed;
    ok = ok && unnamed == 0;
    return Outcome{ok, detail + "; " + std::to_string(unnamed) + " unnamed inapplicable results"};
  });

  report(9, "module theorems on instances with |G| <= 100, |A| <= 9", [&] {
    if (!full_ok) return Outcome{false, "corpus run failed"};
    const auto small = [](const Json& inst) {
      return inst.contains("orders") && inst["orders"]["G"].get<std::size_t>() <= 100 &&
             inst["orders"]["A"].get<std::size_t>() <= 9;
    };
    const auto any = [](const Json&) { return true; };
    const auto h31 = count(full, "thm_3_1", Verdict::Holds, small);
    const auto h33 = count(full, "thm_3_3", Verdict::Holds, small);
    std::size_t failed = 0;
    for (const char* t : {"thm_3_1", "thm_3_3"})
      failed += count(full, t, Verdict::Violated, any) + count(full, t, Verdict::Error, any);
    return Outcome{h31 + h33 >= 10 && failed == 0, "first module theorem " + std::to_string(h31) +
                                                       " fully applicable, second " + std::to_string(h33) + "; " +
                                                       std::to_string(failed) + " failures"};
  });

  report(10, "byte-identical reports across runs and job counts", [&] {
    if (!full_ok) return Outcome{false, "corpus run failed"};
    RunOptions opt;
    opt.jobs = 1;
    opt.corpus_name = "corpus.json";
    const auto again = run_manifest(m, opt);
    const auto a = full.report.dump(2), b = again.report.dump(2);
    return Outcome{a == b, std::to_string(a.size()) + " bytes, jobs 4 vs 1 " + (a == b ? "identical" : "differ")};
  });

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all passed")
            << std::endl;
  return failures ? 1 : 0;
}
