#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "goodaction/harness.hpp"

using namespace goodaction;
namespace fs = std::filesystem;

namespace {

nlohmann::json small_manifest() {
  return nlohmann::json::parse(R"j({
    "schema_version": 1,
    "description": "unit test",
    "instances": [
      {"id": "b-c7-c3", "g": "cyclic(7)", "a": "cyclic(3)", "action": "pow(2)", "tags": ["coprime", "expected-good", "fpf"]},
      {"id": "a-c4-inv", "g": "cyclic(4)", "a": "cyclic(2)", "action": "inv", "tags": ["expected-not-good"],
       "theorems": ["goodness", "prop23", "tower"]},
      {"id": "c-s3", "g": "sym(3)", "a": "cyclic(5)", "action": "trivial", "theorems": ["goodness", "tower", "thm_2_9"]}
    ]})j");
}

fs::path temp_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("goodaction-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GOODACTION_CLI) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST(Manifest, RejectsMalformedInput) {
  auto j = small_manifest();
  EXPECT_NO_THROW(parse_manifest(j));

  auto extra = j;
  extra["instances"][0]["colour"] = "red";
  EXPECT_THROW(parse_manifest(extra), Error);

  auto top = j;
  top["extra"] = 1;
  EXPECT_THROW(parse_manifest(top), Error);

  auto dup = j;
  dup["instances"][1]["id"] = "b-c7-c3";
  EXPECT_THROW(parse_manifest(dup), Error);

  auto ver = j;
  ver["schema_version"] = 99;
  EXPECT_THROW(parse_manifest(ver), Error);

  auto thm = j;
  thm["instances"][1]["theorems"] = {"no_such_theorem"};
  EXPECT_THROW(parse_manifest(thm), Error);

  auto noid = j;
  noid["instances"][0].erase("id");
  EXPECT_THROW(parse_manifest(noid), Error);
}

TEST(Manifest, BadGroupExpressionFailsAtBuild) {
  auto j = small_manifest();
  j["instances"][0]["g"] = "cyclic(";
  const auto m = parse_manifest(j);
  EXPECT_THROW(run_manifest(m, {}), Error);
}

TEST(Harness, ReportsAreOrderedAndDeterministic) {
  const auto m = parse_manifest(small_manifest());
  RunOptions one;
  RunOptions many;
  many.jobs = 4;
  const auto r1 = run_manifest(m, one);
  const auto r2 = run_manifest(m, one);
  const auto r3 = run_manifest(m, many);
  EXPECT_EQ(r1.report.dump(2), r2.report.dump(2));
  EXPECT_EQ(r1.report.dump(2), r3.report.dump(2));
  ASSERT_EQ(r1.instances.size(), 3u);
  EXPECT_EQ(r1.instances[0].id, "a-c4-inv");
  EXPECT_EQ(r1.instances[2].id, "c-s3");
  EXPECT_EQ(r1.exit_code, 0);
  EXPECT_EQ(r1.report.dump().find("seconds"), std::string::npos);
  const auto& inv = r1.report["instances"][0]["reports"][0];
  EXPECT_EQ(inv["theorem"], "goodness");
  EXPECT_EQ(inv["verdict"], "holds");
  EXPECT_EQ(inv["witnesses"]["good"], false);
}

TEST(Harness, TheoremFilterAndUnknownIds) {
  const auto m = parse_manifest(small_manifest());
  RunOptions opt;
  opt.theorems = {"tower"};
  const auto r = run_manifest(m, opt);
  for (const auto& ir : r.instances) {
    ASSERT_EQ(ir.reports.size(), 1u);
    EXPECT_EQ(ir.reports[0].theorem, "tower");
    EXPECT_NE(ir.reports[0].verdict, Verdict::Violated);
    EXPECT_NE(ir.reports[0].verdict, Verdict::Error);
  }
  EXPECT_EQ(r.instances[0].reports[0].failed_hypothesis, "action is good");
  EXPECT_EQ(r.instances[1].reports[0].verdict, Verdict::Holds);
  opt.theorems = {"bogus"};
  EXPECT_THROW(run_manifest(m, opt), Error);
}

TEST(Harness, NotApplicableNamesHypothesis) {
  const auto m = parse_manifest(small_manifest());
  RunOptions opt;
  opt.theorems = {"thm_2_9"};
  const auto r = run_manifest(m, opt);
  const auto& rep = r.instances[2].reports.at(0);
  if (rep.verdict == Verdict::NotApplicable) EXPECT_FALSE(rep.failed_hypothesis.empty());
}

TEST(Harness, ViolationGivesExitOne) {
  auto j = small_manifest();
  j["instances"][1]["tags"] = {"expected-good"};
  const auto r = run_manifest(parse_manifest(j), {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.instances[0].reports[0].verdict, Verdict::Violated);
}

TEST(Harness, LatticeCacheIsWrittenAndReused) {
  const auto dir = temp_dir("cache");
  ::setenv(kCacheEnv, dir.c_str(), 1);
  const auto m = parse_manifest(small_manifest());
  const auto first = run_manifest(m, {});
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") ++files;
  EXPECT_EQ(files, 3u);
  const auto second = run_manifest(m, {});
  EXPECT_EQ(first.report.dump(), second.report.dump());
  // a corrupted entry is ignored and rewritten
  for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{not json";
  const auto third = run_manifest(m, {});
  EXPECT_EQ(first.report.dump(), third.report.dump());
  ::unsetenv(kCacheEnv);
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  const auto dir = temp_dir("cli");
  const auto manifest = dir / "m.json";
  std::ofstream(manifest) << small_manifest().dump(2);
  const auto report = (dir / "r.json").string();

  EXPECT_EQ(run_cli("check-good --g 'cyclic(7)' --a 'cyclic(3)' --action 'pow(2)'"), 0);
  EXPECT_EQ(run_cli("check-good --g 'cyclic(4)' --a 'cyclic(2)' --action inv"), 1);
  EXPECT_EQ(run_cli("check-good --g 'cyclic(4' --a 'cyclic(2)' --action inv"), 2);
  EXPECT_EQ(run_cli("check-good --g 'cyclic(4)' --a 'cyclic(3)' --action inv"), 2);
  EXPECT_EQ(run_cli("info --g 'sym(4)'"), 0);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("verify --corpus " + manifest.string()), 2);
  EXPECT_EQ(run_cli("verify --corpus /nonexistent.json --report " + report), 2);
  EXPECT_EQ(run_cli("verify --corpus " + manifest.string() + " --report " + report), 0);
  std::ifstream in(report);
  std::stringstream a;
  a << in.rdbuf();
  EXPECT_EQ(run_cli("verify --jobs 3 --corpus " + manifest.string() + " --report " + report), 0);
  std::ifstream in2(report);
  std::stringstream b;
  b << in2.rdbuf();
  EXPECT_EQ(a.str(), b.str());

  auto big = small_manifest();
  big["instances"] = nlohmann::json::array();
  big["instances"].push_back({{"id", "huge"}, {"g", "cyclic(9000)"}, {"a", "cyclic(1)"}, {"action", "trivial"}});
  std::ofstream(manifest) << big.dump();
  EXPECT_EQ(run_cli("verify --corpus " + manifest.string() + " --report " + report), 3);

  auto bad = small_manifest();
  bad["instances"][1]["tags"] = {"expected-good"};
  std::ofstream(manifest) << bad.dump();
  EXPECT_EQ(run_cli("verify --corpus " + manifest.string() + " --report " + report), 1);
  fs::remove_all(dir);
}
