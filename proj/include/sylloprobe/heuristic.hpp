#pragma once

// The quantifier/negation symmetry heuristic as an executable baseline.

#include <array>
#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sylloprobe/catalog.hpp"
#include "sylloprobe/logic.hpp"

namespace sylloprobe {

struct SymmetryFeatures {
  bool premise_has_some = false;
  bool premise_has_negation = false;
  bool hypothesis_has_some = false;
  bool hypothesis_has_negation = false;

  bool symmetric_some() const { return premise_has_some == hypothesis_has_some; }
  bool symmetric_negation() const { return premise_has_negation == hypothesis_has_negation; }

  friend bool operator==(const SymmetryFeatures&, const SymmetryFeatures&) = default;
};

// "some" = I or O; negation = E ("No") or O ("not").
bool has_some(StatementType t);
bool has_negation(StatementType t);

SymmetryFeatures extract_features(const Mood& mood);
inline SymmetryFeatures extract_features(const PatternSchema& p) { return extract_features(p.mood()); }

nlohmann::ordered_json features_to_json(const SymmetryFeatures& f);
SymmetryFeatures features_from_json(const nlohmann::json& j);  // throws SchemaError

enum class HeuristicPolicy {
  Conjunctive,  // symmetric = symmetric_some && symmetric_negation
  Disjunctive,  // symmetric = symmetric_some || symmetric_negation
};

std::string_view to_string(HeuristicPolicy p);
HeuristicPolicy heuristic_policy_from_string(std::string_view s);  // throws std::invalid_argument

bool is_symmetric(const SymmetryFeatures& f, HeuristicPolicy policy);

// Entailment for the symmetric class, Contradiction otherwise. Never Neutral.
Label heuristic_predict(const SymmetryFeatures& f, HeuristicPolicy policy);

struct SimulationSummary {
  HeuristicPolicy policy = HeuristicPolicy::Conjunctive;
  std::size_t samples = 0;
  // [gold][predicted], indices follow Label.
  std::array<std::array<std::size_t, 3>, 3> counts{};

  nlohmann::ordered_json to_json() const;
};

// Reads a canonical dataset, writes one {id, label, source: "heuristic"}
// line per row to `predictions`, in dataset order. Features are derived from
// the row's premise and hypothesis text. Throws SchemaError with the line
// number on malformed rows, IoError on file problems.
SimulationSummary simulate(const std::filesystem::path& dataset,
                           const std::filesystem::path& predictions, HeuristicPolicy policy);

}  // namespace sylloprobe
