#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "sylloprobe/dataset.hpp"
#include "sylloprobe/errors.hpp"
#include "sylloprobe/eval.hpp"
#include "unit/test_util.hpp"

namespace sylloprobe {
namespace {

std::vector<Sample> make_samples(std::size_t n) {
  static const PatternCatalog catalog = build_catalog(Semantics::existential());
  GenerationConfig cfg;
  cfg.selection = {n, n, n};
  return generate(catalog, Lexicon::builtin(), cfg);
}

std::filesystem::path write_samples(const testing::TempDir& dir, const std::vector<Sample>& samples,
                                    const std::string& name = "dataset.jsonl") {
  std::string text;
  for (const auto& s : samples) text += sample_to_jsonl_line(s);
  testing::write_file(dir / name, text);
  return dir / name;
}

std::string prediction_line(const std::string& id, Label l, const std::string& source = "test") {
  return nlohmann::ordered_json{{"id", id}, {"label", to_string(l)}, {"source", source}}.dump() + "\n";
}

std::filesystem::path write_predictions(const testing::TempDir& dir,
                                        const std::vector<std::pair<std::string, Label>>& preds,
                                        const std::string& name = "pred.jsonl") {
  std::string text;
  for (const auto& [id, l] : preds) text += prediction_line(id, l);
  testing::write_file(dir / name, text);
  return dir / name;
}

std::vector<std::pair<std::string, Label>> gold_predictions(const std::vector<Sample>& samples) {
  std::vector<std::pair<std::string, Label>> out;
  for (const auto& s : samples) out.emplace_back(s.id, s.gold);
  return out;
}

TEST(Evaluate, GoldAsPredictionsScoresPerfectly) {
  testing::TempDir dir;
  auto samples = make_samples(2);
  auto report = evaluate(write_samples(dir, samples), write_predictions(dir, gold_predictions(samples)));
  EXPECT_EQ(report.dataset_rows, samples.size());
  EXPECT_EQ(report.covered, samples.size());
  EXPECT_DOUBLE_EQ(report.coverage(), 100.0);
  EXPECT_DOUBLE_EQ(report.overall_accuracy(), 100.0);
  for (Label l : kAllLabels) {
    EXPECT_DOUBLE_EQ(*report.accuracy(l), 100.0);
    EXPECT_DOUBLE_EQ(report.row_percent(l, l), 100.0);
  }
  EXPECT_EQ(report.source, "test");
  ASSERT_EQ(report.per_pattern.size(), 36U);
  for (const auto& p : report.per_pattern) {
    EXPECT_EQ(p.total, 8U);
    EXPECT_DOUBLE_EQ(p.accuracy(), 100.0);
  }
  EXPECT_EQ(report.per_pattern.front().pattern, "BARBARA");
}

TEST(Evaluate, HeuristicScoresZeroOnNeutral) {
  testing::TempDir dir;
  auto samples = make_samples(2);
  const auto dataset = write_samples(dir, samples);
  simulate(dataset, dir / "h.jsonl", HeuristicPolicy::Conjunctive);
  auto report = evaluate(dataset, dir / "h.jsonl");
  EXPECT_EQ(report.source, "heuristic");
  EXPECT_DOUBLE_EQ(*report.accuracy(Label::Neutral), 0.0);
  EXPECT_DOUBLE_EQ(*report.accuracy(Label::Entailment), 100.0);
  EXPECT_LT(*report.accuracy(Label::Neutral), kChanceAccuracy);
  // symmetric class predicted entailment, asymmetric contradiction
  EXPECT_DOUBLE_EQ(report.symmetry.symmetric.percent(Label::Entailment), 100.0);
  EXPECT_DOUBLE_EQ(report.symmetry.asymmetric.percent(Label::Contradiction), 100.0);
}

// Neutral-row distribution of a published model run: 23.68 / 68.01 / 8.31
// percent contradiction / entailment / neutral over 40,500 neutral rows.
TEST(Evaluate, ReproducesPublishedNeutralRow) {
  const std::size_t contradiction = 9590, entailment = 27544, neutral = 3366;
  ASSERT_EQ(contradiction + entailment + neutral, 40500U);

  testing::TempDir dir;
  const auto samples = make_samples(15);
  std::vector<std::pair<std::string, Label>> preds;
  std::size_t k = 0;
  for (const auto& s : samples) {
    if (s.gold != Label::Neutral) {
      preds.emplace_back(s.id, s.gold);
      continue;
    }
    const Label l = k < contradiction                ? Label::Contradiction
                    : k < contradiction + entailment ? Label::Entailment
                                                     : Label::Neutral;
    preds.emplace_back(s.id, l);
    ++k;
  }
  ASSERT_EQ(k, 40500U);
  auto report = evaluate(write_samples(dir, samples), write_predictions(dir, preds));
  EXPECT_NEAR(report.row_percent(Label::Neutral, Label::Contradiction), 23.68, 0.01);
  EXPECT_NEAR(report.row_percent(Label::Neutral, Label::Entailment), 68.01, 0.01);
  EXPECT_NEAR(report.row_percent(Label::Neutral, Label::Neutral), 8.31, 0.01);
  EXPECT_DOUBLE_EQ(round2(report.row_percent(Label::Neutral, Label::Contradiction)), 23.68);
  EXPECT_DOUBLE_EQ(round2(report.row_percent(Label::Neutral, Label::Entailment)), 68.01);
  EXPECT_DOUBLE_EQ(round2(report.row_percent(Label::Neutral, Label::Neutral)), 8.31);

  const auto md = render_report(report, ReportFormat::Markdown);
  EXPECT_NE(md.find("| neutral | 40500 | 68.01 | 23.68 | 8.31 |"), std::string::npos) << md;
}

TEST(Evaluate, PartialCoverage) {
  testing::TempDir dir;
  auto samples = make_samples(1);
  auto preds = gold_predictions(samples);
  preds.resize(9);
  preds.emplace_back("not-in-dataset", Label::Neutral);
  auto report = evaluate(write_samples(dir, samples), write_predictions(dir, preds));
  EXPECT_EQ(report.covered, 9U);
  EXPECT_EQ(report.unmatched_predictions, 1U);
  EXPECT_DOUBLE_EQ(report.coverage(), 25.0);
  EXPECT_FALSE(report.accuracy(Label::Contradiction) == std::nullopt);
}

TEST(Evaluate, AccuracyIsNulloptWithoutRowsOfThatLabel) {
  testing::TempDir dir;
  auto samples = make_samples(1);
  auto report = evaluate(write_samples(dir, samples),
                         write_predictions(dir, {{samples[0].id, Label::Entailment}}));
  EXPECT_TRUE(report.accuracy(Label::Entailment).has_value());
  EXPECT_FALSE(report.accuracy(Label::Neutral).has_value());
}

TEST(Evaluate, ErrorPaths) {
  testing::TempDir dir;
  auto samples = make_samples(1);
  const auto dataset = write_samples(dir, samples);

  testing::write_file(dir / "dup.jsonl", prediction_line(samples[0].id, Label::Neutral) +
                                             prediction_line(samples[0].id, Label::Entailment));
  try {
    evaluate(dataset, dir / "dup.jsonl");
    FAIL() << "expected DuplicatePredictionId";
  } catch (const DuplicatePredictionId& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }

  testing::write_file(dir / "bad.jsonl", R"({"id":"BARBARA.0.0.0","label":"Entailment"})" "\n");
  EXPECT_THROW(evaluate(dataset, dir / "bad.jsonl"), UnknownLabelString);

  testing::write_file(dir / "none.jsonl", prediction_line("nope", Label::Neutral));
  EXPECT_THROW(evaluate(dataset, dir / "none.jsonl"), EmptyIntersection);

  EXPECT_THROW(evaluate(dataset, dir / "missing.jsonl"), IoError);

  auto doubled = samples;
  doubled.push_back(samples[0]);
  const auto dup_dataset = write_samples(dir, doubled, "dup_dataset.jsonl");
  EXPECT_THROW(evaluate(dup_dataset, write_predictions(dir, gold_predictions(samples))), SchemaError);
}

TEST(Evaluate, MixedSources) {
  testing::TempDir dir;
  auto samples = make_samples(1);
  testing::write_file(dir / "p.jsonl", prediction_line(samples[0].id, Label::Entailment, "a") +
                                           prediction_line(samples[1].id, Label::Entailment, "b"));
  EXPECT_EQ(evaluate(write_samples(dir, samples), dir / "p.jsonl").source, "mixed");
}

// Row order of the predictions file does not matter.
TEST(EvaluateProperty, PermutationInvariance) {
  testing::TempDir dir;
  auto samples = make_samples(2);
  const auto dataset = write_samples(dir, samples);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> label(0, 2);
  auto preds = gold_predictions(samples);
  for (auto& p : preds) p.second = static_cast<Label>(label(rng));
  const auto base = report_to_json(evaluate(dataset, write_predictions(dir, preds))).dump();
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(preds.begin(), preds.end(), rng);
    EXPECT_EQ(report_to_json(evaluate(dataset, write_predictions(dir, preds))).dump(), base);
  }
}

// Adding predictions never lowers coverage; accuracy decomposes over labels.
TEST(EvaluateProperty, CoverageMonotoneAndAccuracyDecomposes) {
  testing::TempDir dir;
  auto samples = make_samples(2);
  const auto dataset = write_samples(dir, samples);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> label(0, 2);
  auto all = gold_predictions(samples);
  for (auto& p : all) p.second = static_cast<Label>(label(rng));
  std::shuffle(all.begin(), all.end(), rng);
  double last = 0.0;
  for (std::size_t n = 1; n <= all.size(); n += 23) {
    std::vector<std::pair<std::string, Label>> subset(all.begin(), all.begin() + static_cast<long>(n));
    auto r = evaluate(dataset, write_predictions(dir, subset));
    EXPECT_GE(r.coverage(), last);
    last = r.coverage();
    EXPECT_EQ(r.covered, n);
    double weighted = 0.0;
    for (Label l : kAllLabels) {
      const auto& row = r.confusion[static_cast<int>(l)];
      if (row.total() == 0) continue;
      weighted += *r.accuracy(l) * static_cast<double>(row.total());
      double sum = 0.0;
      for (Label p : kAllLabels) sum += r.row_percent(l, p);
      EXPECT_NEAR(sum, 100.0, 1e-9);
    }
    EXPECT_NEAR(weighted / static_cast<double>(r.covered), r.overall_accuracy(), 1e-9);
  }
}

TEST(SymmetryBreakdown, GoldLabelsAsPredictions) {
  testing::TempDir dir;
  auto samples = make_samples(1);
  auto b = symmetry_breakdown(write_samples(dir, samples), write_predictions(dir, gold_predictions(samples)));
  std::size_t symmetric = 0;
  for (const auto& s : samples) symmetric += is_symmetric(s.features, HeuristicPolicy::Conjunctive);
  EXPECT_EQ(b.symmetric.total(), symmetric);
  EXPECT_EQ(b.symmetric.total() + b.asymmetric.total(), 36U);
  EXPECT_EQ(b.symmetric, b.symmetric_gold);
  EXPECT_EQ(b.asymmetric.counts[static_cast<int>(Label::Entailment)], 0U);
}

TEST(Render, FormatsAgree) {
  testing::TempDir dir;
  auto samples = make_samples(1);
  auto report = evaluate(write_samples(dir, samples), write_predictions(dir, gold_predictions(samples)));

  const auto md = render_report(report, ReportFormat::Markdown);
  EXPECT_NE(md.find("| entailment | 12 | 100.00 | 33.33 |"), std::string::npos) << md;
  EXPECT_NE(md.find("| BARBARA-NEUT | neutral | 1 | 100.00 |"), std::string::npos) << md;

  const auto csv = render_report(report, ReportFormat::Csv);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = csv.find("\r\n", pos)) != std::string::npos; pos += 2) ++lines;
  EXPECT_EQ(lines, 10U);
  EXPECT_EQ(csv.rfind("gold,predicted,count,row_percent\r\n", 0), 0U);
  EXPECT_NE(csv.find("neutral,neutral,12,100.00\r\n"), std::string::npos);

  const auto json = nlohmann::json::parse(render_report(report, ReportFormat::Json));
  EXPECT_DOUBLE_EQ(json["overall_accuracy"].get<double>(), 100.0);
  EXPECT_DOUBLE_EQ(json["chance_accuracy"].get<double>(), 33.33);
  const auto back = report_from_json(json);
  EXPECT_EQ(report_to_json(back).dump(), report_to_json(report).dump());
}

TEST(Render, FormatNames) {
  EXPECT_EQ(report_format_from_string("json"), ReportFormat::Json);
  EXPECT_EQ(report_format_from_string("csv"), ReportFormat::Csv);
  EXPECT_EQ(report_format_from_string("markdown"), ReportFormat::Markdown);
  EXPECT_THROW(report_format_from_string("html"), std::invalid_argument);
  EXPECT_EQ(extension(ReportFormat::Markdown), "md");
  EXPECT_DOUBLE_EQ(round2(23.679), 23.68);
  EXPECT_DOUBLE_EQ(round2(8.3111), 8.31);
}

TEST(Predictions, ScoresAsArrayOrObject) {
  auto a = prediction_from_json(
      nlohmann::json::parse(R"({"id":"x","label":"neutral","source":"m","scores":[0.1,0.2,0.7]})"), 1);
  ASSERT_TRUE(a.scores);
  EXPECT_DOUBLE_EQ((*a.scores)[2], 0.7);
  auto b = prediction_from_json(nlohmann::json::parse(
      R"({"id":"x","label":"neutral","scores":{"neutral":0.7,"entailment":0.1,"contradiction":0.2}})"), 1);
  EXPECT_EQ(a.scores, b.scores);
  EXPECT_FALSE(prediction_from_json(nlohmann::json::parse(R"({"id":"x","label":"neutral"})"), 1).scores);
  EXPECT_THROW(prediction_from_json(
                   nlohmann::json::parse(R"({"id":"x","label":"neutral","scores":[0.1,0.2]})"), 1),
               SchemaError);
  EXPECT_THROW(prediction_from_json(
                   nlohmann::json::parse(R"({"id":"x","label":"neutral","scores":[-1,0,0]})"), 1),
               SchemaError);
  EXPECT_THROW(prediction_from_json(nlohmann::json::parse(R"({"label":"neutral"})"), 1), SchemaError);
  EXPECT_EQ(prediction_to_json(a).dump(),
            R"({"id":"x","label":"neutral","source":"m","scores":[0.1,0.2,0.7]})");
}

}  // namespace
}  // namespace sylloprobe
