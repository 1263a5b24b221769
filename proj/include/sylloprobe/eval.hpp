#pragma once

// Scoring of prediction files against a probe dataset.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sylloprobe/heuristic.hpp"
#include "sylloprobe/logic.hpp"

namespace sylloprobe {

inline constexpr double kChanceAccuracy = 100.0 / 3.0;

struct PredictionRecord {
  std::string id;
  Label label;
  std::string source;
  // entailment, contradiction, neutral
  std::optional<std::array<double, 3>> scores;
};

// Accepts {id, label, source[, scores]} where scores is either a 3-array in
// entailment/contradiction/neutral order or an object keyed by label name.
// Throws UnknownLabelString, SchemaError.
PredictionRecord prediction_from_json(const nlohmann::json& j, std::size_t line);
nlohmann::ordered_json prediction_to_json(const PredictionRecord& p);

// Throws DuplicatePredictionId on a repeated id.
std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path);

struct LabelDistribution {
  std::array<std::size_t, 3> counts{};  // indexed by Label

  std::size_t total() const { return counts[0] + counts[1] + counts[2]; }
  double percent(Label l) const;
  friend bool operator==(const LabelDistribution&, const LabelDistribution&) = default;
};

struct PatternAccuracy {
  std::string pattern;
  Label gold;
  std::size_t total = 0;
  std::size_t correct = 0;

  double accuracy() const;
};

struct SymmetryBreakdown {
  HeuristicPolicy policy = HeuristicPolicy::Conjunctive;
  LabelDistribution symmetric;   // predicted labels
  LabelDistribution asymmetric;
  LabelDistribution symmetric_gold;
  LabelDistribution asymmetric_gold;
};

struct EvalReport {
  std::string source;  // "mixed" if the predictions disagree
  std::size_t dataset_rows = 0;
  std::size_t covered = 0;
  std::size_t unmatched_predictions = 0;  // prediction ids absent from the dataset
  // [gold][predicted] counts, indexed by Label.
  std::array<LabelDistribution, 3> confusion{};
  std::vector<PatternAccuracy> per_pattern;  // dataset order
  SymmetryBreakdown symmetry;

  double coverage() const;          // percent of dataset rows with a prediction
  double overall_accuracy() const;  // percent over covered rows
  // Percent; nullopt when no covered row has that gold label.
  std::optional<double> accuracy(Label gold) const;
  double row_percent(Label gold, Label predicted) const;
};

// Scores the intersection of dataset and prediction ids. Missing predictions
// only lower coverage. Throws DuplicatePredictionId, UnknownLabelString,
// EmptyIntersection, SchemaError, IoError.
EvalReport evaluate(const std::filesystem::path& dataset, const std::filesystem::path& predictions,
                    HeuristicPolicy policy = HeuristicPolicy::Conjunctive);

SymmetryBreakdown symmetry_breakdown(const std::filesystem::path& dataset,
                                     const std::filesystem::path& predictions,
                                     HeuristicPolicy policy = HeuristicPolicy::Conjunctive);

enum class ReportFormat { Json, Csv, Markdown };

ReportFormat report_format_from_string(std::string_view s);  // throws std::invalid_argument
std::string_view extension(ReportFormat f);

// Numbers are rounded to two decimals on output only.
std::string render_report(const EvalReport& report, ReportFormat format);

nlohmann::ordered_json report_to_json(const EvalReport& report);
// Inverse of report_to_json for the count-carrying fields.
EvalReport report_from_json(const nlohmann::json& j);

double round2(double x);

}  // namespace sylloprobe
