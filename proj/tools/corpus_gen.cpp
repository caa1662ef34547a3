// Regenerates corpus/corpus.json: enumerates small actions and induced
// modules and keeps instances chosen by running the verifiers on them.
//
//   goodaction-corpus > corpus/corpus.json
//
// Progress and per-theorem applicability counts go to stderr.

#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "goodaction/enumerate.hpp"
#include "goodaction/harness.hpp"

using namespace goodaction;

namespace {

Json instance_json(const CorpusInstance& ci) {
  Json j;
  j["id"] = ci.id;
  if (ci.affine) {
    Json af;
    af["h"] = ci.affine->h;
    af["p"] = ci.affine->p;
    j["affine"] = af;
  } else {
    j["g"] = ci.g;
    j["a"] = ci.a;
    j["action"] = ci.action;
  }
  if (ci.b) j["b"] = *ci.b;
  if (ci.rep) {
    Json r;
    r["subgroup"] = ci.rep->subgroup;
    r["conductor"] = ci.rep->conductor;
    r["exponents"] = ci.rep->exponents;
    j["rep"] = r;
  }
  if (ci.normal) j["normal"] = *ci.normal;
  if (!ci.tags.empty()) j["tags"] = ci.tags;
  if (ci.theorems) j["theorems"] = *ci.theorems;
  return j;
}

Verdict run(const CorpusInstance& ci, const std::string& theorem) {
  auto d = build_instance(ci, Bounds{}, 1);
  return run_theorem(theorem, d).verdict;
}

// Small solvable groups used as G.
const std::vector<std::string> kGroups{
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(5)",
    "cyclic(7)",
    "cyclic(9)",
    "cyclic(11)",
    "cyclic(13)",
    "cyclic(16)",
    "cyclic(19)",
    "cyclic(25)",
    "cyclic(31)",
    "dp(cyclic(2),cyclic(2))",
    "dp(cyclic(3),cyclic(3))",
    "dp(cyclic(2),dp(cyclic(2),cyclic(2)))",
    "dp(cyclic(5),cyclic(5))",
    "sym(3)",
    "sd(cyclic(5),cyclic(2),inv)",
    "sd(cyclic(7),cyclic(3),pow(2))",
    "sd(cyclic(5),cyclic(4),pow(2))",
    "sd(dp(cyclic(2),cyclic(2)),cyclic(3),images(1,3))",
    "sd(cyclic(9),cyclic(2),inv)",
    "sym(4)",
    "named(sl2_3)",
    "dp(sym(3),cyclic(3))",
    "sd(dp(cyclic(3),cyclic(3)),cyclic(2),inv)",
};

// Nilpotent acting groups of order at most 9.
const std::vector<std::string> kActors{
    "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(5)", "cyclic(7)", "cyclic(8)", "cyclic(9)",
    "dp(cyclic(2),cyclic(2))", "dp(cyclic(3),cyclic(3))",
};

bool nontrivial(const ActionChoice& c) {
  for (const auto& t : c.tables)
    for (Elem x = 0; x < t.size(); ++x)
      if (t[x] != x) return true;
  return false;
}

}  // namespace

int main() {
  std::vector<CorpusInstance> out;
  std::map<std::string, int> applicable;
  auto note = [&](const CorpusInstance& ci) {
    for (const char* t : {"thm_2_9", "thm_2_10", "cor_2_11", "thm_4_2", "thm_4_4", "thm_4_5"})
      if (run(ci, t) == Verdict::Holds) ++applicable[t];
  };

  // 1. coprime actions, |GA| <= 400: up to two nontrivial actions per pair
  int coprime = 0;
  for (const auto& ge : kGroups)
    for (const auto& ae : kActors) {
      auto g = parse_group(ge);
      auto a = parse_group(ae);
      if (std::gcd(g->order(), a->order()) != 1 || g->order() * a->order() > 400) continue;
      const auto acts = all_actions(g, a, 2000);
      std::set<std::size_t> fixed_sizes;
      for (const auto& c : acts) {
        if (!nontrivial(c)) continue;
        CorpusInstance ci;
        ci.id = "coprime-" + std::string(coprime < 9 ? "0" : "") + std::to_string(coprime + 1);
        ci.g = ge;
        ci.a = ae;
        ci.action = c.spec;
        ci.tags = {"coprime", "expected-good"};
        auto d = build_instance(ci, Bounds{}, 1);
        // a second action only when its fixed points differ in size
        if (!fixed_sizes.insert(d.cga().size()).second) continue;
        if (d.cga().is_trivial()) ci.tags.push_back("fpf");
        note(ci);
        out.push_back(ci);
        ++coprime;
        if (fixed_sizes.size() == 2) break;
      }
    }
  std::cerr << coprime << " coprime instances\n";

  // 2. hand-picked noncoprime actions
  {
    CorpusInstance ci;
    ci.id = "noncoprime-c2-inv-c4";
    ci.g = "cyclic(4)";
    ci.a = "cyclic(2)";
    ci.action = "inv";
    ci.tags = {"expected-not-good"};
    out.push_back(ci);
  }
  int nc = 0;
  for (const std::string ge : {"sym(3)", "cyclic(6)", "sym(4)", "named(sl2_3)", "dp(cyclic(2),cyclic(2))",
                               "sd(cyclic(9),cyclic(2),inv)", "cyclic(8)", "sd(cyclic(7),cyclic(3),pow(2))"})
    for (const std::string ae : {"cyclic(2)", "cyclic(3)", "dp(cyclic(2),cyclic(2))"}) {
      auto g = parse_group(ge);
      auto a = parse_group(ae);
      if (std::gcd(g->order(), a->order()) == 1) continue;
      for (const auto& c : all_actions(g, a, 2000)) {
        if (!nontrivial(c)) continue;
        CorpusInstance ci;
        ci.id = "noncoprime-" + std::string(nc < 9 ? "0" : "") + std::to_string(nc + 1);
        ci.g = ge;
        ci.a = ae;
        ci.action = c.spec;
        note(ci);
        out.push_back(ci);
        ++nc;
        break;
      }
    }

  // 3. taller Fitting series under trivial or coprime actions
  int tw = 0;
  for (const auto& [ge, ae] : std::vector<std::pair<std::string, std::string>>{
           {"sym(4)", "cyclic(1)"},
           {"sym(4)", "cyclic(5)"},
           {"dp(sym(4),cyclic(2))", "cyclic(1)"},
           {"dp(sym(4),cyclic(3))", "cyclic(5)"},
           {"named(sl2_3)", "cyclic(1)"},
           {"dp(sym(3),sym(3))", "cyclic(1)"},
           {"wr(sym(3),2)", "cyclic(1)"},
           {"wr(cyclic(3),2)", "cyclic(1)"},
           {"sd(dp(cyclic(3),cyclic(3)),cyclic(4),images(1,6))", "cyclic(1)"},
           {"dp(named(sl2_3),cyclic(5))", "cyclic(1)"},
           {"sd(dp(dp(cyclic(2),cyclic(2)),cyclic(2)),cyclic(7),images(2,1,6))", "cyclic(1)"},
       }) {
    CorpusInstance ci;
    ci.id = "tower-" + std::string(tw < 9 ? "0" : "") + std::to_string(tw + 1);
    ci.g = ge;
    ci.a = ae;
    ci.action = "trivial";
    try {
      build_instance(ci, Bounds{}, 1);
    } catch (const Error& e) {
      std::cerr << "skip " << ge << ": " << e.what() << "\n";
      continue;
    }
    out.push_back(ci);
    ++tw;
  }

  // 4. complex modules induced from linear characters of subgroups of GA;
  // one per G, preferring a nonhomogeneous restriction to some N
  int reps = 0, nonhom = 0;
  for (const std::string ge :
       {"cyclic(3)", "cyclic(5)", "cyclic(7)", "cyclic(9)", "dp(cyclic(2),cyclic(2))", "sym(3)",
        "sd(cyclic(5),cyclic(2),inv)", "sd(cyclic(7),cyclic(3),pow(2))", "sd(cyclic(5),cyclic(4),pow(2))",
        "sd(dp(cyclic(2),cyclic(2)),cyclic(3),images(1,3))", "sd(cyclic(9),cyclic(2),inv)", "sym(4)",
        "named(sl2_3)", "dp(sym(3),cyclic(3))", "sd(dp(cyclic(3),cyclic(3)),cyclic(2),inv)",
        "sd(cyclic(3),cyclic(4),inv)", "dp(sym(3),cyclic(2))"}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto g = parse_group(ge);
    std::optional<CorpusInstance> best;
    bool best_nonhom = false;
    std::size_t best_dim = 0;
    for (const auto& ae : kActors) {
      auto a = parse_group(ae);
      if (g->order() * a->order() > 300 || best_nonhom) continue;
      for (const auto& c : all_actions(g, a, 12)) {
        if (!nontrivial(c) || best_nonhom) continue;
        CorpusInstance base;
        base.g = ge;
        base.a = ae;
        base.action = c.spec;
        auto d = build_instance(base, Bounds{}, 1);
        const Action& act = d.action();
        if (!regular_orbits_check(act, whole_group(a)).ok) continue;
        for (const auto& k : all_subgroups(act.ga())) {
          if (act.ga()->order() / k.size() > 12 || best_nonhom) continue;
          for (const auto& lambda : linear_characters(k)) {
            ComplexRep v = induce_from_linear(act.ga(), lambda);
            if (fixed_space_dim(v, act.a_in_ga()) != 0) continue;
            if (!homogeneous_components(v, act.g_in_ga()).is_homogeneous()) continue;
            CorpusInstance ci = base;
            RepSpec rs;
            rs.subgroup = k.generators();
            rs.conductor = lambda.conductor;
            for (Elem s : rs.subgroup) rs.exponents.push_back(lambda.exponent[s]);
            ci.rep = rs;
            auto dd = build_instance(ci, Bounds{}, 1);
            auto rep31 = run_theorem("thm_3_1", dd);
            if (rep31.verdict != Verdict::Holds) continue;
            bool has_nonhom = false;
            for (const auto& e : rep31.witnesses["per_n"])
              if (e["components"].get<std::size_t>() > 1) has_nonhom = true;
            if (!best || (has_nonhom && !best_nonhom)) {
              best = ci;
              best_nonhom = has_nonhom;
              best_dim = v.degree();
            }
            if (best_nonhom) break;
          }
        }
      }
    }
    std::cerr << ge << ": " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
    if (!best) continue;
    best->id = "module-" + std::string(reps < 9 ? "0" : "") + std::to_string(reps + 1);
    best->theorems = std::vector<std::string>{"goodness", "thm_3_1", "thm_3_3"};
    std::cerr << best->id << " " << ge << " / " << best->a << " dim " << best_dim
              << (best_nonhom ? " nonhomogeneous V_N" : "") << "\n";
    out.push_back(*best);
    ++reps;
    nonhom += best_nonhom;
  }
  std::cerr << reps << " module instances (" << nonhom << " with nonhomogeneous V_N)\n";

  // 5. the order-189 configuration and the affine example
  {
    CorpusInstance ci;
    ci.id = "order189";
    ci.g = "sd(cyclic(7),cyclic(9),pow(2))";
    ci.a = "cyclic(3)";
    ci.action = "images(1,28)";
    ci.rep = RepSpec{{1, 21, 63}, 21, {3, 0, 7}};
    ci.normal = std::vector<Elem>{1, 21};
    ci.theorems = std::vector<std::string>{"goodness", "thm_3_1", "thm_3_3"};
    out.push_back(ci);
  }
  {
    CorpusInstance ci;
    ci.id = "affine-frobenius600";
    ci.affine = AffineSpec{"named(frobenius600)", 2, std::nullopt};
    out.push_back(ci);
  }

  for (const auto& [t, n] : applicable) std::cerr << t << ": " << n << " applicable and holding\n";

  Json m;
  m["schema_version"] = kManifestSchemaVersion;
  m["description"] = "Small actions, induced modules and two worked configurations";
  Json insts = Json::array();
  for (const auto& ci : out) insts.push_back(instance_json(ci));
  m["instances"] = insts;
  std::cout << m.dump(2) << "\n";
}
