#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sylloprobe/cli.hpp"
#include "unit/test_util.hpp"

namespace sylloprobe {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "sylloprobe");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, PatternsTable) {
  auto r = run({"patterns"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count_lines(r.out), 37U);
  EXPECT_NE(r.out.find("BARBARA-CONTRA    1       AAE   contradiction"), std::string::npos) << r.out;
}

TEST(Cli, PatternsJsonToFile) {
  testing::TempDir dir;
  auto r = run({"patterns", "--format", "json", "-o", (dir / "c.json").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(testing::read_file(dir / "c.json"));
  EXPECT_EQ(j["patterns"].size(), 36U);
  EXPECT_EQ(run({"patterns", "--semantics", "modern", "--format", "json"}).code, kExitOk);
}

TEST(Cli, LabelSinglePair) {
  auto r = run({"label", "--premise",
                "All Gabonese are Budget analysts, and all Element collectors are Gabonese.",
                "--hypothesis", "All Element collectors are Budget analysts."});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "entailment\n");
  r = run({"label", "--premise", "All A are B, and all C are A.", "--hypothesis", "No C are B."});
  EXPECT_EQ(r.out, "contradiction\n");
  r = run({"label", "--premise", "All A are B, and some C are A.", "--hypothesis", "All C are B."});
  EXPECT_EQ(r.out, "neutral\n");
  r = run({"label", "--premise", "It has rained.", "--hypothesis", "All C are B."});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"patterns", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(run({"validate"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "--select", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"patterns", "--help"}).code, kExitOk);
}

TEST(Cli, IoErrors) {
  testing::TempDir dir;
  EXPECT_EQ(run({"validate", "--dataset", (dir / "missing.jsonl").string()}).code, kExitIo);
  testing::write_file(dir / "blocker", "x");
  auto r = run({"generate", "--select", "1", "--out", (dir / "blocker" / "sub").string()});
  EXPECT_EQ(r.code, kExitIo) << r.err;
}

TEST(Cli, GenerateValidateSimulateEvaluate) {
  testing::TempDir dir;
  const std::string out = (dir / "run").string();
  auto r = run({"generate", "--select", "2", "--out", out, "--csv", "--shuffle-seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto manifest = nlohmann::json::parse(testing::read_file(dir / "run" / "manifest.json"));
  EXPECT_EQ(manifest["sample_count"], 36 * 8);
  EXPECT_EQ(manifest["shuffle_seed"], 3);
  EXPECT_EQ(manifest["parameters"]["selection"]["hobbies"], 2);
  EXPECT_TRUE(std::filesystem::exists(dir / "run" / "dataset.csv"));

  const std::string dataset = (dir / "run" / "dataset.jsonl").string();
  r = run({"validate", "--dataset", dataset, "--report", (dir / "v.json").string()});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("disagreements: 0"), std::string::npos);
  EXPECT_TRUE(nlohmann::json::parse(testing::read_file(dir / "v.json"))["ok"].get<bool>());

  const std::string preds = (dir / "h.jsonl").string();
  r = run({"simulate", "--dataset", dataset, "-o", preds});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(testing::read_lines(preds).size(), 36U * 8);
  const auto summary = nlohmann::json::parse(testing::read_file(dir / "h.summary.json"));
  EXPECT_EQ(summary["by_gold"]["neutral"]["predicted"]["neutral"]["count"], 0);

  r = run({"evaluate", "--dataset", dataset, "--predictions", preds, "--format", "json", "--format",
           "csv", "--format", "markdown", "--out-prefix", (dir / "report").string(), "--symmetry"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "report.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "report.md"));
  EXPECT_NE(r.out.find("symmetric n="), std::string::npos);
  const auto report = nlohmann::json::parse(testing::read_file(dir / "report.json"));
  EXPECT_EQ(report["per_label_accuracy"]["neutral"], 0.0);
  EXPECT_EQ(report["run_config"]["subcommand"], "evaluate");
}

TEST(Cli, ValidateFlagsDisagreement) {
  testing::TempDir dir;
  ASSERT_EQ(run({"generate", "--select", "1", "--out", dir.path().string()}).code, kExitOk);
  auto lines = testing::read_lines(dir / "dataset.jsonl");
  auto j = nlohmann::ordered_json::parse(lines[0]);
  j["label"] = "neutral";
  lines[0] = j.dump();
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  testing::write_file(dir / "dataset.jsonl", text);
  auto r = run({"validate", "--dataset", (dir / "dataset.jsonl").string()});
  EXPECT_EQ(r.code, kExitDisagreement);
  EXPECT_NE(r.out.find("disagreements: 1"), std::string::npos);
  EXPECT_NE(r.out.find("BARBARA.0.0.0"), std::string::npos);
}

TEST(Cli, JobsDoNotChangeDataset) {
  testing::TempDir dir;
  ASSERT_EQ(run({"generate", "--select", "3", "--out", (dir / "a").string(), "-j", "1"}).code, kExitOk);
  ASSERT_EQ(run({"generate", "--select", "3", "--out", (dir / "b").string(), "-j", "6"}).code, kExitOk);
  EXPECT_EQ(testing::sha256_file(dir / "a" / "dataset.jsonl"),
            testing::sha256_file(dir / "b" / "dataset.jsonl"));
}

TEST(Cli, OutputDirectoryFromEnvironment) {
  testing::TempDir dir;
  const std::string target = (dir / "from-env").string();
  ::setenv(kOutDirEnv, target.c_str(), 1);
  auto r = run({"generate", "--select", "1"});
  ::unsetenv(kOutDirEnv);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "from-env" / "dataset.jsonl"));
  EXPECT_TRUE(std::filesystem::exists(dir / "from-env" / "manifest.json"));
}

TEST(Cli, CustomLexiconAndRoles) {
  testing::TempDir dir;
  testing::write_file(dir / "occ.txt", "Pilots\nNurses\n");
  auto r = run({"generate", "--out", (dir / "o").string(), "--occupations", (dir / "occ.txt").string(),
                "--select", "2", "--subject", "occupation", "--predicate", "hobby"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto first = nlohmann::json::parse(testing::read_lines(dir / "o" / "dataset.jsonl").front());
  EXPECT_EQ(first["subject"], "Pilots");
  EXPECT_EQ(first["predicate"], "Element collectors");
  r = run({"generate", "--out", (dir / "p").string(), "--occupations", (dir / "occ.txt").string()});
  EXPECT_EQ(r.code, kExitUsage);  // 15 requested, 2 available
}

}  // namespace
}  // namespace sylloprobe
