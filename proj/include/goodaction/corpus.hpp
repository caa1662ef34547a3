#pragma once

// Corpus manifests: JSON, schema version 1, unknown fields rejected.
// docs/manifest.md describes the format.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "goodaction/error.hpp"
#include "goodaction/group.hpp"

namespace goodaction {

inline constexpr int kManifestSchemaVersion = 1;

struct RepSpec {
  std::vector<Elem> subgroup;  // generators in GA
  unsigned conductor = 1;
  std::vector<unsigned> exponents;  // lambda(subgroup[i]) = zeta^exponents[i]
};

struct AffineSpec {
  std::string h;  // group expression
  unsigned p = 2;
  std::optional<Elem> x;  // element of H; default: first element of order 3
};

struct CorpusInstance {
  std::string id;
  std::string g, a, action;
  std::optional<AffineSpec> affine;
  std::optional<std::vector<Elem>> b;       // generators of B in A
  std::optional<RepSpec> rep;
  std::optional<std::vector<Elem>> normal;  // generators of N in GA
  std::vector<std::string> tags;
  std::optional<std::vector<std::string>> theorems;

  bool has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }
};

struct Manifest {
  int schema_version = kManifestSchemaVersion;
  std::string description;
  std::vector<CorpusInstance> instances;
};

namespace detail {

inline void only_fields(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& where) {
  require(j.is_object(), ErrorKind::InvalidArgument, where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    require(allowed.count(it.key()) != 0, ErrorKind::InvalidArgument, where + ": unknown field '" + it.key() + "'");
}

inline std::string get_string(const nlohmann::json& j, const char* key, const std::string& where) {
  require(j.contains(key) && j[key].is_string(), ErrorKind::InvalidArgument,
          where + ": field '" + key + "' must be a string");
  return j[key].get<std::string>();
}

template <typename T>
std::vector<T> get_uints(const nlohmann::json& j, const char* key, const std::string& where) {
  require(j.contains(key) && j[key].is_array(), ErrorKind::InvalidArgument,
          where + ": field '" + key + "' must be an array");
  std::vector<T> out;
  for (const auto& e : j[key]) {
    require(e.is_number_unsigned(), ErrorKind::InvalidArgument,
            where + ": field '" + key + "' must hold nonnegative integers");
    out.push_back(e.get<T>());
  }
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"goodness", "prop23",   "invariant_hall", "tower",    "thm_2_9",
                                            "thm_2_10", "cor_2_11", "thm_3_1",        "thm_3_3",  "thm_4_2",
                                            "thm_4_4",  "thm_4_5",  "example_1"};
  return ids;
}

inline bool is_theorem_id(const std::string& s) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), s) != ids.end();
}

inline Manifest parse_manifest(const nlohmann::json& j) {
  using namespace detail;
  only_fields(j, {"schema_version", "description", "instances"}, "manifest");
  require(j.contains("schema_version") && j["schema_version"].is_number_integer(), ErrorKind::InvalidArgument,
          "manifest: schema_version is required");
  Manifest m;
  m.schema_version = j["schema_version"].get<int>();
  require(m.schema_version == kManifestSchemaVersion, ErrorKind::InvalidArgument,
          "manifest: unsupported schema_version " + std::to_string(m.schema_version));
  if (j.contains("description")) m.description = get_string(j, "description", "manifest");
  require(j.contains("instances") && j["instances"].is_array(), ErrorKind::InvalidArgument,
          "manifest: instances must be an array");
  std::set<std::string> seen;
  for (const auto& e : j["instances"]) {
    const std::string where = "instance " + std::to_string(m.instances.size());
    only_fields(e, {"id", "g", "a", "action", "affine", "b", "rep", "normal", "tags", "theorems"}, where);
    CorpusInstance ci;
    ci.id = get_string(e, "id", where);
    require(!ci.id.empty() && seen.insert(ci.id).second, ErrorKind::InvalidArgument,
            where + ": id must be nonempty and unique");
    const std::string w = "instance '" + ci.id + "'";
    if (e.contains("affine")) {
      require(!e.contains("g") && !e.contains("a") && !e.contains("action") && !e.contains("rep") && !e.contains("b") &&
                  !e.contains("normal"),
              ErrorKind::InvalidArgument, w + ": an affine instance takes no g, a, action, b, rep or normal");
      const auto& af = e["affine"];
      only_fields(af, {"h", "p", "x"}, w + ".affine");
      AffineSpec spec;
      spec.h = get_string(af, "h", w + ".affine");
      require(af.contains("p") && af["p"].is_number_unsigned(), ErrorKind::InvalidArgument, w + ".affine: p is required");
      spec.p = af["p"].get<unsigned>();
      if (af.contains("x")) {
        require(af["x"].is_number_unsigned(), ErrorKind::InvalidArgument, w + ".affine: x must be an element index");
        spec.x = af["x"].get<Elem>();
      }
      ci.affine = spec;
    } else {
      ci.g = get_string(e, "g", w);
      ci.a = get_string(e, "a", w);
      ci.action = get_string(e, "action", w);
    }
    if (e.contains("b")) ci.b = get_uints<Elem>(e, "b", w);
    if (e.contains("normal")) ci.normal = get_uints<Elem>(e, "normal", w);
    if (e.contains("rep")) {
      const auto& r = e["rep"];
      only_fields(r, {"subgroup", "conductor", "exponents"}, w + ".rep");
      RepSpec spec;
      spec.subgroup = get_uints<Elem>(r, "subgroup", w + ".rep");
      require(r.contains("conductor") && r["conductor"].is_number_unsigned() && r["conductor"].get<unsigned>() >= 1,
              ErrorKind::InvalidArgument, w + ".rep: conductor must be a positive integer");
      spec.conductor = r["conductor"].get<unsigned>();
      spec.exponents = get_uints<unsigned>(r, "exponents", w + ".rep");
      require(spec.exponents.size() == spec.subgroup.size(), ErrorKind::InvalidArgument,
              w + ".rep: one exponent per subgroup generator");
      ci.rep = spec;
    }
    if (e.contains("tags")) {
      require(e["tags"].is_array(), ErrorKind::InvalidArgument, w + ": tags must be an array");
      for (const auto& t : e["tags"]) {
        require(t.is_string(), ErrorKind::InvalidArgument, w + ": tags must be strings");
        ci.tags.push_back(t.get<std::string>());
      }
    }
    if (e.contains("theorems")) {
      require(e["theorems"].is_array(), ErrorKind::InvalidArgument, w + ": theorems must be an array");
      std::vector<std::string> th;
      for (const auto& t : e["theorems"]) {
        require(t.is_string() && is_theorem_id(t.get<std::string>()), ErrorKind::InvalidArgument,
                w + ": unknown theorem id " + t.dump());
        th.push_back(t.get<std::string>());
      }
      ci.theorems = std::move(th);
    }
    m.instances.push_back(std::move(ci));
  }
  return m;
}

inline Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot open manifest " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, "manifest " + path + " is not valid JSON: " + e.what());
  }
  return parse_manifest(j);
}

}  // namespace goodaction
