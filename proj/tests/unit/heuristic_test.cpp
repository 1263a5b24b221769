#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "sylloprobe/dataset.hpp"
#include "sylloprobe/errors.hpp"
#include "sylloprobe/heuristic.hpp"
#include "unit/test_util.hpp"

namespace sylloprobe {
namespace {

SymmetryFeatures features_of(const char* code) { return extract_features(Mood::from_code(code)); }

TEST(Features, Barbara) {
  const auto f = features_of("AAA");
  EXPECT_FALSE(f.premise_has_some);
  EXPECT_FALSE(f.premise_has_negation);
  EXPECT_FALSE(f.hypothesis_has_some);
  EXPECT_FALSE(f.hypothesis_has_negation);
  EXPECT_TRUE(f.symmetric_some());
  EXPECT_TRUE(f.symmetric_negation());
}

TEST(Features, BarbaraContradictionIsNegationAsymmetric) {
  const auto f = features_of("AAE");
  EXPECT_TRUE(f.symmetric_some());
  EXPECT_FALSE(f.symmetric_negation());
  EXPECT_EQ(heuristic_predict(f, HeuristicPolicy::Conjunctive), Label::Contradiction);
  EXPECT_EQ(heuristic_predict(f, HeuristicPolicy::Disjunctive), Label::Entailment);
}

TEST(Features, FerioUsesBothMarkersOnBothSides) {
  const auto f = features_of("EIO");
  EXPECT_TRUE(f.premise_has_some);
  EXPECT_TRUE(f.premise_has_negation);
  EXPECT_TRUE(f.hypothesis_has_some);
  EXPECT_TRUE(f.hypothesis_has_negation);
}

TEST(Features, MarkerTable) {
  EXPECT_FALSE(has_some(StatementType::A));
  EXPECT_FALSE(has_some(StatementType::E));
  EXPECT_TRUE(has_some(StatementType::I));
  EXPECT_TRUE(has_some(StatementType::O));
  EXPECT_FALSE(has_negation(StatementType::A));
  EXPECT_TRUE(has_negation(StatementType::E));
  EXPECT_FALSE(has_negation(StatementType::I));
  EXPECT_TRUE(has_negation(StatementType::O));
}

TEST(Features, JsonRoundTrip) {
  for (const Mood& m : all_moods()) {
    const auto f = extract_features(m);
    EXPECT_EQ(features_from_json(features_to_json(f)), f);
  }
  EXPECT_THROW(features_from_json(nlohmann::json::parse(R"({"premise_has_some":1})")), SchemaError);
}

TEST(Predict, NeverNeutralForAnyMoodOrPolicy) {
  for (auto policy : {HeuristicPolicy::Conjunctive, HeuristicPolicy::Disjunctive}) {
    for (const Mood& m : all_moods()) {
      const auto f = extract_features(m);
      const Label l = heuristic_predict(f, policy);
      EXPECT_NE(l, Label::Neutral);
      EXPECT_EQ(l == Label::Entailment, is_symmetric(f, policy));
    }
  }
}

TEST(Predict, DisjunctiveIsWeakerThanConjunctive) {
  for (const Mood& m : all_moods()) {
    const auto f = extract_features(m);
    if (is_symmetric(f, HeuristicPolicy::Conjunctive)) {
      EXPECT_TRUE(is_symmetric(f, HeuristicPolicy::Disjunctive));
    }
  }
}

TEST(Predict, PolicyStrings) {
  EXPECT_EQ(heuristic_policy_from_string("conjunctive"), HeuristicPolicy::Conjunctive);
  EXPECT_EQ(heuristic_policy_from_string("disjunctive"), HeuristicPolicy::Disjunctive);
  EXPECT_EQ(to_string(HeuristicPolicy::Disjunctive), "disjunctive");
  EXPECT_THROW(heuristic_policy_from_string("either"), std::invalid_argument);
}

// Features depend only on statement types, never on the filler words.
TEST(Predict, IndependentOfTerms) {
  const auto catalog = build_catalog(Semantics::existential());
  const Lexicon lex = Lexicon::builtin();
  for (const auto& p : catalog.patterns()) {
    const auto expected = extract_features(p);
    for (std::size_t i = 0; i < 15; i += 7) {
      auto text = realize_sample(p, {lex.hobbies[i], lex.nationalities[14 - i], lex.occupations[i]});
      auto parsed = parse_sample(text.premise, text.hypothesis);
      EXPECT_EQ(extract_features(parsed.mood()), expected) << p.name;
    }
  }
}

TEST(Simulate, ConjunctiveOnGeneratedDataset) {
  testing::TempDir dir;
  const auto catalog = build_catalog(Semantics::existential());
  GenerationConfig cfg;
  cfg.selection = {2, 2, 2};
  auto samples = generate(catalog, Lexicon::builtin(), cfg);
  auto files = write_dataset(samples, make_manifest(catalog, Lexicon::builtin(), samples, std::nullopt, {}),
                             dir.path());
  const auto out = dir / "pred.jsonl";
  auto summary = simulate(files.dataset, out, HeuristicPolicy::Conjunctive);
  EXPECT_EQ(summary.samples, samples.size());

  const auto lines = testing::read_lines(out);
  ASSERT_EQ(lines.size(), samples.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto j = nlohmann::json::parse(lines[i]);
    EXPECT_EQ(j["id"], samples[i].id);
    EXPECT_EQ(j["source"], "heuristic");
    EXPECT_EQ(j["label"], to_string(heuristic_predict(samples[i].features, HeuristicPolicy::Conjunctive)));
  }

  const auto E = static_cast<int>(Label::Entailment);
  const auto C = static_cast<int>(Label::Contradiction);
  const auto N = static_cast<int>(Label::Neutral);
  // Every valid mood is symmetric, so all entailment rows are predicted entailment.
  EXPECT_EQ(summary.counts[E][E], 12U * 8);
  for (int g = 0; g < 3; ++g) EXPECT_EQ(summary.counts[g][N], 0U);
  EXPECT_EQ(summary.counts[C][E] + summary.counts[C][C], 12U * 8);

  auto j = summary.to_json();
  EXPECT_EQ(j["policy"], "conjunctive");
  EXPECT_EQ(j["samples"], samples.size());
}

TEST(Simulate, MalformedRowReportsLine) {
  testing::TempDir dir;
  testing::write_file(dir / "d.jsonl",
                      R"({"id":"a","label":"entailment","premise":"All A are B, and all C are A.","hypothesis":"All C are B."})"
                      "\n"
                      R"({"id":"b","label":"entailment"})"
                      "\n");
  try {
    simulate(dir / "d.jsonl", dir / "p.jsonl", HeuristicPolicy::Conjunctive);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(simulate(dir / "missing.jsonl", dir / "p.jsonl", HeuristicPolicy::Conjunctive), IoError);
}

}  // namespace
}  // namespace sylloprobe
