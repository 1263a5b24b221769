#include "sylloprobe/eval.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "sylloprobe/dataset.hpp"
#include "sylloprobe/errors.hpp"
#include "sylloprobe/jsonl.hpp"
#include "sylloprobe/surface.hpp"

namespace sylloprobe {

PredictionRecord prediction_from_json(const nlohmann::json& j, std::size_t line) {
  const std::string where = "line " + std::to_string(line) + ": ";
  if (!j.is_object()) throw SchemaError(where + "prediction is not a JSON object");
  if (!j.contains("id") || !j["id"].is_string()) throw SchemaError(where + "missing string \"id\"");
  if (!j.contains("label") || !j["label"].is_string()) {
    throw SchemaError(where + "missing string \"label\"");
  }
  PredictionRecord p;
  p.id = j["id"].get<std::string>();
  try {
    p.label = label_from_string(j["label"].get<std::string>());
  } catch (const UnknownLabelString& e) {
    throw UnknownLabelString(where + e.what());
  }
  if (j.contains("source")) {
    if (!j["source"].is_string()) throw SchemaError(where + "\"source\" must be a string");
    p.source = j["source"].get<std::string>();
  }
  if (j.contains("scores") && !j["scores"].is_null()) {
    const auto& s = j["scores"];
    std::array<double, 3> scores{};
    if (s.is_array() && s.size() == 3) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (!s[i].is_number()) throw SchemaError(where + "non-numeric score");
        scores[i] = s[i].get<double>();
      }
    } else if (s.is_object() && s.size() == 3) {
      for (Label l : kAllLabels) {
        const std::string key(to_string(l));
        if (!s.contains(key) || !s[key].is_number()) {
          throw SchemaError(where + "scores object lacks \"" + key + "\"");
        }
        scores[static_cast<int>(l)] = s[key].get<double>();
      }
    } else {
      throw SchemaError(where + "scores must be three numbers");
    }
    for (double v : scores) {
      if (!(v >= 0.0)) throw SchemaError(where + "scores must be nonnegative");
    }
    p.scores = scores;
  }
  return p;
}

nlohmann::ordered_json prediction_to_json(const PredictionRecord& p) {
  nlohmann::ordered_json j;
  j["id"] = p.id;
  j["label"] = to_string(p.label);
  j["source"] = p.source;
  if (p.scores) j["scores"] = *p.scores;
  return j;
}

std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path) {
  std::vector<PredictionRecord> out;
  std::unordered_map<std::string, std::size_t> first_line;
  for_each_line(path, [&](std::size_t line, std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError("line " + std::to_string(line) + ": invalid JSON: " + e.what());
    }
    PredictionRecord p = prediction_from_json(j, line);
    auto [it, inserted] = first_line.emplace(p.id, line);
    if (!inserted) {
      throw DuplicatePredictionId("line " + std::to_string(line) + ": prediction id \"" + p.id +
                                  "\" already seen on line " + std::to_string(it->second));
    }
    out.push_back(std::move(p));
  });
  return out;
}

double LabelDistribution::percent(Label l) const {
  const std::size_t n = total();
  if (n == 0) return 0.0;
  return 100.0 * static_cast<double>(counts[static_cast<int>(l)]) / static_cast<double>(n);
}

double PatternAccuracy::accuracy() const {
  return total ? 100.0 * static_cast<double>(correct) / static_cast<double>(total) : 0.0;
}

double EvalReport::coverage() const {
  return dataset_rows ? 100.0 * static_cast<double>(covered) / static_cast<double>(dataset_rows)
                      : 0.0;
}

double EvalReport::overall_accuracy() const {
  std::size_t correct = 0;
  std::size_t total = 0;
  for (Label l : kAllLabels) {
    correct += confusion[static_cast<int>(l)].counts[static_cast<int>(l)];
    total += confusion[static_cast<int>(l)].total();
  }
  return total ? 100.0 * static_cast<double>(correct) / static_cast<double>(total) : 0.0;
}

std::optional<double> EvalReport::accuracy(Label gold) const {
  const auto& row = confusion[static_cast<int>(gold)];
  if (row.total() == 0) return std::nullopt;
  return row.percent(gold);
}

double EvalReport::row_percent(Label gold, Label predicted) const {
  return confusion[static_cast<int>(gold)].percent(predicted);
}

EvalReport evaluate(const std::filesystem::path& dataset, const std::filesystem::path& predictions,
                    HeuristicPolicy policy) {
  const std::vector<PredictionRecord> preds = read_predictions(predictions);
  std::unordered_map<std::string_view, const PredictionRecord*> by_id;
  by_id.reserve(preds.size());
  std::set<std::string_view> sources;
  for (const auto& p : preds) {
    by_id.emplace(p.id, &p);
    sources.insert(p.source);
  }

  EvalReport report;
  report.symmetry.policy = policy;
  report.source = sources.size() == 1 ? std::string(*sources.begin()) : std::string("mixed");

  std::map<std::string, std::size_t> pattern_slot;
  std::set<std::string_view> dataset_ids;
  const std::vector<DatasetRow> rows = read_dataset(dataset);

  for (const DatasetRow& row : rows) {
    ++report.dataset_rows;
    if (!dataset_ids.insert(row.id).second) {
      throw SchemaError("line " + std::to_string(row.line) + ": duplicate dataset id \"" + row.id +
                        "\"");
    }
    auto it = by_id.find(row.id);
    if (it == by_id.end()) continue;
    const Label predicted = it->second->label;
    ++report.covered;
    ++report.confusion[static_cast<int>(row.gold)].counts[static_cast<int>(predicted)];

    const std::string pattern = row.pattern.empty() ? std::string("(unnamed)") : row.pattern;
    auto [slot, fresh] = pattern_slot.emplace(pattern, report.per_pattern.size());
    if (fresh) report.per_pattern.push_back(PatternAccuracy{pattern, row.gold});
    PatternAccuracy& acc = report.per_pattern[slot->second];
    ++acc.total;
    if (predicted == row.gold) ++acc.correct;

    Mood mood;
    try {
      mood = parse_sample(row.premise, row.hypothesis).mood();
    } catch (const UnparsableStatement& e) {
      throw SchemaError("line " + std::to_string(row.line) + ": " + e.what());
    }
    const bool symmetric = is_symmetric(extract_features(mood), policy);
    auto& dist = symmetric ? report.symmetry.symmetric : report.symmetry.asymmetric;
    auto& gold = symmetric ? report.symmetry.symmetric_gold : report.symmetry.asymmetric_gold;
    ++dist.counts[static_cast<int>(predicted)];
    ++gold.counts[static_cast<int>(row.gold)];
  }

  for (const auto& p : preds) {
    if (!dataset_ids.contains(p.id)) ++report.unmatched_predictions;
  }
  if (report.covered == 0) {
    throw EmptyIntersection("no prediction id matches a dataset id (" +
                            std::to_string(preds.size()) + " predictions, " +
                            std::to_string(report.dataset_rows) + " dataset rows)");
  }
  return report;
}

SymmetryBreakdown symmetry_breakdown(const std::filesystem::path& dataset,
                                     const std::filesystem::path& predictions,
                                     HeuristicPolicy policy) {
  return evaluate(dataset, predictions, policy).symmetry;
}

}  // namespace sylloprobe
