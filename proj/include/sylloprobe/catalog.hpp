#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sylloprobe/logic.hpp"

namespace sylloprobe {

struct PatternSchema {
  std::string name;
  Figure figure;
  CategoricalStatement premise1;
  CategoricalStatement premise2;
  CategoricalStatement conclusion;
  Label gold;

  Mood mood() const { return Mood{{premise1.type(), premise2.type(), conclusion.type()}}; }
};

// Builds the statements for (figure, mood) with the role arrangement of the
// figure. The gold label is taken as given; callers verify it.
PatternSchema make_pattern(std::string name, Figure figure, const Mood& mood, Label gold);

// Re-derives the label of a pattern with the cell-mask oracle.
Label classify(const PatternSchema& pattern, Semantics sem);

struct NamedMood {
  std::string_view name;
  Figure figure;
  std::string_view mood;
};

// The twelve classical moods of figures 1-3, in their traditional listing
// order: BARBARA, CELARENT, DARII, FERIO, CESARE, CAMESTRES, FESTINO, BAROCO,
// DISAMIS, DATISI, BOCARDO, FERISON.
const std::vector<NamedMood>& named_moods();

inline constexpr std::string_view kContraSuffix = "-CONTRA";
inline constexpr std::string_view kNeutralSuffix = "-NEUT";
inline constexpr std::string_view kCatalogVersion = "syllogisms-36/1.0+reconstructed";

// Minimal single-type edit of a valid mood that yields `target`.
// Positions are tried conclusion, premise2, premise1; candidate types follow a
// per-target preference (contradiction: E O A I, neutral: I A O E).
// Edits whose premises become unsatisfiable are skipped, as are edits landing
// on a (figure, mood) listed in `taken`; the scan order is otherwise unchanged.
PatternSchema derive_variant(const PatternSchema& parent, Label target, Semantics sem,
                             std::span<const FigureMood> taken = {});

class PatternCatalog {
 public:
  // Throws NoVariantFound / CatalogInvariantViolation.
  static PatternCatalog build(Semantics sem);

  const std::vector<PatternSchema>& patterns() const { return patterns_; }
  Semantics semantics() const { return semantics_; }
  std::string_view version() const { return kCatalogVersion; }

  // nullptr when absent.
  const PatternSchema* find(std::string_view name) const;

  nlohmann::ordered_json to_json() const;

 private:
  PatternCatalog(std::vector<PatternSchema> patterns, Semantics sem)
      : patterns_(std::move(patterns)), semantics_(sem) {}

  std::vector<PatternSchema> patterns_;
  Semantics semantics_;
};

inline PatternCatalog build_catalog(Semantics sem) { return PatternCatalog::build(sem); }

nlohmann::ordered_json pattern_to_json(const PatternSchema& p);

}  // namespace sylloprobe
