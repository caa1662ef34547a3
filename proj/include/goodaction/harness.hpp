#pragma once

// Runs a manifest: builds every instance, verifies the selected theorems on a
// worker pool, and merges the reports in instance-identifier order.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/version.hpp>

#include "goodaction/corpus.hpp"
#include "goodaction/report.hpp"
#include "goodaction/theorems.hpp"

namespace goodaction {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCacheEnv = "GOODACTION_CACHE_DIR";

// ---------------------------------------------------------------------------
// Lattice cache: one JSON file per group expression, keyed by its hash.

namespace detail {

inline std::string mask_bits(const Mask& m) {
  std::string s;
  boost::to_string(m, s);  // most significant bit first
  return s;
}

inline std::optional<std::vector<Subgroup>> read_lattice(const std::filesystem::path& file, const GroupPtr& g,
                                                         const std::string& expr) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j;
    in >> j;
    if (j.at("expr").get<std::string>() != expr || j.at("order").get<std::size_t>() != g->order()) return std::nullopt;
    std::vector<Subgroup> out;
    for (const auto& e : j.at("subgroups")) {
      const auto bits = e.at("mask").get<std::string>();
      auto gens = e.at("generators").get<std::vector<Elem>>();
      if (bits.size() != g->order()) return std::nullopt;
      const Mask m(bits);
      for (Elem x : gens)
        if (x >= g->order() || !m.test(x)) return std::nullopt;
      // generators are kept so witnesses print the same with or without the cache
      auto s = closure(g, std::span<const Elem>(gens));
      if (s.mask() != m) return std::nullopt;
      out.push_back(Subgroup(g, m, std::move(gens)));
    }
    auto sorted = out;
    sort_canonical(sorted);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!(sorted[i] == out[i])) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

inline void write_lattice(const std::filesystem::path& file, const std::string& expr, const GroupPtr& g,
                          const std::vector<Subgroup>& lattice) {
  nlohmann::ordered_json j;
  j["expr"] = expr;
  j["order"] = g->order();
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const auto& s : lattice) subs.push_back({{"mask", mask_bits(s.mask())}, {"generators", s.generators()}});
  j["subgroups"] = std::move(subs);
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace detail

/// Loads or stores the subgroup lattice of the instance's G when the cache
/// directory variable is set.
inline void attach_lattice_cache(InstanceData& d) {
  const char* dir = std::getenv(kCacheEnv);
  if (!dir || !*dir || !d.act || d.act->g()->order() > d.bounds.subgroup_order) return;
  const std::string expr = parse_term(d.spec.g).canonical();
  std::ostringstream name;
  name << std::hex << expression_hash(d.spec.g) << ".json";
  const auto file = std::filesystem::path(dir) / name.str();
  if (auto lattice = detail::read_lattice(file, d.act->g(), expr)) {
    d.act->preload_g_subgroups(std::move(*lattice));
    return;
  }
  detail::write_lattice(file, expr, d.act->g(), d.act->g_subgroups(d.bounds));
}

// ---------------------------------------------------------------------------

struct RunOptions {
  std::vector<std::string> theorems;  // empty: all
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  Bounds bounds;
  std::string corpus_name;
};

struct InstanceResult {
  std::string id;
  Json header;
  std::vector<TheoremReport> reports;
  double seconds = 0;
};

struct RunResult {
  std::vector<InstanceResult> instances;  // sorted by id
  Json report;
  int exit_code = 0;
};

/// Builds every instance; throws the first construction error (input error).
inline std::vector<InstanceData> build_all(const Manifest& m, const RunOptions& opt) {
  std::vector<InstanceData> out;
  for (const auto& ci : m.instances) {
    try {
      out.push_back(build_instance(ci, opt.bounds, opt.seed));
    } catch (const Error& e) {
      throw Error(e.kind(), "instance '" + ci.id + "': " + e.what());
    }
  }
  return out;
}

inline std::vector<std::string> selected_theorems(const InstanceData& d, const RunOptions& opt) {
  std::vector<std::string> base = d.spec.theorems ? *d.spec.theorems : default_theorems(d);
  if (opt.theorems.empty()) return base;
  std::vector<std::string> out;
  for (const auto& t : base)
    if (std::find(opt.theorems.begin(), opt.theorems.end(), t) != opt.theorems.end()) out.push_back(t);
  return out;
}

inline Json environment_json(const RunOptions& opt) {
  Json env;
  env["seed"] = opt.seed;
  Json b;
  b["subgroup_order"] = opt.bounds.subgroup_order;
  b["isomorphism_order"] = opt.bounds.isomorphism_order;
  b["induction_index"] = opt.bounds.induction_index;
  b["module_dimension"] = opt.bounds.module_dimension;
  b["cayley_order"] = opt.bounds.cayley_order;
  b["tower_exhaustive_order"] = opt.bounds.tower_exhaustive_order;
  env["bounds"] = std::move(b);
  Json v;
  v["goodaction"] = kVersion;
  v["manifest_schema"] = kManifestSchemaVersion;
  v["boost"] = BOOST_LIB_VERSION;
  v["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                       "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  env["versions"] = std::move(v);
  env["corpus"] = opt.corpus_name;
  env["theorems"] = opt.theorems.empty() ? Json("all") : Json(opt.theorems);
  return env;
}

/// Exit code: 1 on any violated conclusion or non-bound error, otherwise 3 on
/// a bound error, otherwise 0.
inline int exit_code_of(const std::vector<InstanceResult>& results) {
  bool violated = false, bound = false, other = false;
  for (const auto& ir : results)
    for (const auto& r : ir.reports) {
      if (r.verdict == Verdict::Violated) violated = true;
      if (r.verdict == Verdict::Error) {
        if (r.error_kind == to_string(ErrorKind::OrderBoundExceeded) ||
            r.error_kind == to_string(ErrorKind::IndexBoundExceeded))
          bound = true;
        else
          other = true;
      }
    }
  if (violated || other) return 1;
  return bound ? 3 : 0;
}

inline RunResult run_manifest(const Manifest& m, const RunOptions& opt) {
  for (const auto& t : opt.theorems)
    require(is_theorem_id(t), ErrorKind::InvalidArgument, "unknown theorem id '" + t + "'");
  auto data = build_all(m, opt);
  std::vector<InstanceResult> results(data.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < data.size();) {
      const auto t0 = std::chrono::steady_clock::now();
      InstanceData& d = data[i];
      InstanceResult& out = results[i];
      out.id = d.spec.id;
      Json h;
      h["id"] = d.spec.id;
      if (d.is_affine()) {
        Json af;
        af["h"] = d.spec.affine->h;
        af["p"] = d.spec.affine->p;
        if (d.spec.affine->x) af["x"] = *d.spec.affine->x;
        h["affine"] = std::move(af);
      } else {
        h["g"] = d.spec.g;
        h["a"] = d.spec.a;
        h["action"] = d.spec.action;
        h["orders"] = {{"G", d.act->g()->order()}, {"A", d.act->a()->order()}, {"GA", d.act->ga()->order()}};
      }
      h["tags"] = d.spec.tags;
      out.header = std::move(h);
      try {
        attach_lattice_cache(d);
      } catch (const std::exception&) {
        // the cache is an optimization only
      }
      for (const auto& t : selected_theorems(d, opt)) out.reports.push_back(run_theorem(t, d));
      out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // ordered merge by instance identifier
  std::sort(results.begin(), results.end(), [](const InstanceResult& a, const InstanceResult& b) { return a.id < b.id; });
  RunResult rr;
  Json rep;
  rep["report"] = "goodaction-verify";
  rep["environment"] = environment_json(opt);
  Json insts = Json::array();
  std::map<std::string, std::size_t> counts{{"holds", 0}, {"violated", 0}, {"not_applicable", 0}, {"error", 0}};
  for (const auto& ir : results) {
    Json e = ir.header;
    Json reps = Json::array();
    for (const auto& r : ir.reports) {
      reps.push_back(r.to_json());
      ++counts[to_string(r.verdict)];
    }
    e["reports"] = std::move(reps);
    insts.push_back(std::move(e));
  }
  rep["instances"] = std::move(insts);
  Json summary;
  for (const auto& [k, v] : counts) summary[k] = v;
  rep["summary"] = std::move(summary);
  rr.exit_code = exit_code_of(results);
  rr.report = std::move(rep);
  rr.instances = std::move(results);
  return rr;
}

}  // namespace goodaction
