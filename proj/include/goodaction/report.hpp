#pragma once

// TheoremReport: a named hypothesis checklist, a verdict that is only
// evaluated once every hypothesis has passed, and witnesses as JSON.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "goodaction/error.hpp"
#include "goodaction/group.hpp"

namespace goodaction {

using Json = nlohmann::ordered_json;

enum class HypothesisStatus { Pass, Fail, NotApplicable };
enum class Verdict { Holds, Violated, NotApplicable, Error };

inline const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Pass: return "pass";
    case HypothesisStatus::Fail: return "fail";
    case HypothesisStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::NotApplicable: return "not_applicable";
    case Verdict::Error: return "error";
  }
  return "?";
}

struct HypothesisResult {
  std::string name;
  HypothesisStatus status = HypothesisStatus::NotApplicable;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::vector<HypothesisResult> hypotheses;
  std::string conclusion;  // the statement being checked
  Verdict verdict = Verdict::NotApplicable;
  std::string failed_hypothesis;
  std::string detail;
  Json witnesses = Json::object();
  Json seeds = Json::object();
  std::string error_kind;  // set with Verdict::Error
  double seconds = 0;      // wall time; kept out of the JSON report

  bool all_hypotheses_pass() const {
    for (const auto& h : hypotheses)
      if (h.status != HypothesisStatus::Pass) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["theorem"] = theorem;
    j["instance"] = instance;
    Json hs = Json::array();
    for (const auto& h : hypotheses) {
      Json e;
      e["name"] = h.name;
      e["status"] = to_string(h.status);
      if (!h.detail.empty()) e["detail"] = h.detail;
      hs.push_back(std::move(e));
    }
    j["hypotheses"] = std::move(hs);
    j["conclusion"] = conclusion;
    j["verdict"] = to_string(verdict);
    if (!failed_hypothesis.empty()) j["failed_hypothesis"] = failed_hypothesis;
    if (!detail.empty()) j["detail"] = detail;
    if (!error_kind.empty()) j["error_kind"] = error_kind;
    j["witnesses"] = witnesses;
    j["seeds"] = seeds;
    return j;
  }
};

/// Runs hypotheses in order. After the first failure the remaining ones are
/// recorded as not applicable and not evaluated.
class Checklist {
 public:
  explicit Checklist(TheoremReport& r) : r_(r) {}

  /// `test` returns (holds, detail).
  bool check(const std::string& name, const std::function<std::pair<bool, std::string>()>& test) {
    if (!ok_) {
      r_.hypotheses.push_back({name, HypothesisStatus::NotApplicable, "not evaluated: " + r_.failed_hypothesis + " failed"});
      return false;
    }
    auto [holds, detail] = test();
    r_.hypotheses.push_back({name, holds ? HypothesisStatus::Pass : HypothesisStatus::Fail, std::move(detail)});
    if (!holds) {
      ok_ = false;
      r_.failed_hypothesis = name;
    }
    return holds;
  }

  bool ok() const { return ok_; }

  /// Sets the verdict: not applicable unless every hypothesis passed.
  void conclude(bool holds, std::string detail = {}) {
    if (!ok_) {
      r_.verdict = Verdict::NotApplicable;
      return;
    }
    r_.verdict = holds ? Verdict::Holds : Verdict::Violated;
    r_.detail = std::move(detail);
  }

 private:
  TheoremReport& r_;
  bool ok_ = true;
};

inline Json subgroup_json(const Subgroup& s) {
  Json j;
  j["order"] = s.size();
  j["generators"] = s.generators();
  return j;
}

}  // namespace goodaction
