#include "sylloprobe/heuristic.hpp"

#include <stdexcept>
#include <string>

#include "sylloprobe/dataset.hpp"
#include "sylloprobe/errors.hpp"
#include "sylloprobe/jsonl.hpp"
#include "sylloprobe/surface.hpp"

namespace sylloprobe {

bool has_some(StatementType t) { return t == StatementType::I || t == StatementType::O; }
bool has_negation(StatementType t) { return t == StatementType::E || t == StatementType::O; }

SymmetryFeatures extract_features(const Mood& mood) {
  const auto& [p1, p2, c] = mood.types;
  return SymmetryFeatures{has_some(p1) || has_some(p2), has_negation(p1) || has_negation(p2),
                          has_some(c), has_negation(c)};
}

nlohmann::ordered_json features_to_json(const SymmetryFeatures& f) {
  nlohmann::ordered_json j;
  j["premise_has_some"] = f.premise_has_some;
  j["premise_has_negation"] = f.premise_has_negation;
  j["hypothesis_has_some"] = f.hypothesis_has_some;
  j["hypothesis_has_negation"] = f.hypothesis_has_negation;
  j["symmetric_some"] = f.symmetric_some();
  j["symmetric_negation"] = f.symmetric_negation();
  return j;
}

SymmetryFeatures features_from_json(const nlohmann::json& j) {
  auto flag = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_boolean()) {
      throw SchemaError(std::string("features: missing boolean \"") + key + "\"");
    }
    return j[key].get<bool>();
  };
  SymmetryFeatures f{flag("premise_has_some"), flag("premise_has_negation"),
                     flag("hypothesis_has_some"), flag("hypothesis_has_negation")};
  if (flag("symmetric_some") != f.symmetric_some() ||
      flag("symmetric_negation") != f.symmetric_negation()) {
    throw SchemaError("features: symmetric flags inconsistent with base flags");
  }
  return f;
}

std::string_view to_string(HeuristicPolicy p) {
  return p == HeuristicPolicy::Conjunctive ? "conjunctive" : "disjunctive";
}

HeuristicPolicy heuristic_policy_from_string(std::string_view s) {
  if (s == "conjunctive") return HeuristicPolicy::Conjunctive;
  if (s == "disjunctive") return HeuristicPolicy::Disjunctive;
  throw std::invalid_argument("unknown heuristic policy \"" + std::string(s) +
                              "\" (expected conjunctive or disjunctive)");
}

bool is_symmetric(const SymmetryFeatures& f, HeuristicPolicy policy) {
  if (policy == HeuristicPolicy::Conjunctive) return f.symmetric_some() && f.symmetric_negation();
  return f.symmetric_some() || f.symmetric_negation();
}

Label heuristic_predict(const SymmetryFeatures& f, HeuristicPolicy policy) {
  return is_symmetric(f, policy) ? Label::Entailment : Label::Contradiction;
}

nlohmann::ordered_json SimulationSummary::to_json() const {
  nlohmann::ordered_json j;
  j["policy"] = to_string(policy);
  j["samples"] = samples;
  nlohmann::ordered_json by_gold;
  for (Label gold : kAllLabels) {
    const auto& row = counts[static_cast<int>(gold)];
    std::size_t total = 0;
    for (auto c : row) total += c;
    nlohmann::ordered_json dist;
    for (Label pred : kAllLabels) {
      const std::size_t n = row[static_cast<int>(pred)];
      dist[std::string(to_string(pred))] = {
          {"count", n}, {"percent", total ? 100.0 * static_cast<double>(n) / static_cast<double>(total) : 0.0}};
    }
    by_gold[std::string(to_string(gold))] = {{"total", total}, {"predicted", dist}};
  }
  j["by_gold"] = by_gold;
  return j;
}

SimulationSummary simulate(const std::filesystem::path& dataset,
                           const std::filesystem::path& predictions, HeuristicPolicy policy) {
  SimulationSummary summary;
  summary.policy = policy;
  std::string out;
  for_each_line(dataset, [&](std::size_t line, std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError("line " + std::to_string(line) + ": invalid JSON: " + e.what());
    }
    const DatasetRow row = dataset_row_from_json(j, line);
    Mood mood;
    try {
      mood = parse_sample(row.premise, row.hypothesis).mood();
    } catch (const UnparsableStatement& e) {
      throw SchemaError("line " + std::to_string(line) + ": " + e.what());
    }
    const Label predicted = heuristic_predict(extract_features(mood), policy);
    ++summary.samples;
    ++summary.counts[static_cast<int>(row.gold)][static_cast<int>(predicted)];

    nlohmann::ordered_json record;
    record["id"] = row.id;
    record["label"] = to_string(predicted);
    record["source"] = "heuristic";
    out += record.dump();
    out += '\n';
  });
  write_text_file(predictions, out);
  return summary;
}

}  // namespace sylloprobe
