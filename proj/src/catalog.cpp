#include "sylloprobe/catalog.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "sylloprobe/errors.hpp"

namespace sylloprobe {

PatternSchema make_pattern(std::string name, Figure figure, const Mood& mood, Label gold) {
  auto st = statements_for(figure, mood);
  return PatternSchema{std::move(name), figure, st[0], st[1], st[2], gold};
}

Label classify(const PatternSchema& pattern, Semantics sem) {
  return classify(pattern.premise1, pattern.premise2, pattern.conclusion, sem);
}

const std::vector<NamedMood>& named_moods() {
  static const std::vector<NamedMood> kMoods = {
      {"BARBARA", Figure::Fig1, "AAA"},   {"CELARENT", Figure::Fig1, "EAE"},
      {"DARII", Figure::Fig1, "AII"},     {"FERIO", Figure::Fig1, "EIO"},
      {"CESARE", Figure::Fig2, "EAE"},    {"CAMESTRES", Figure::Fig2, "AEE"},
      {"FESTINO", Figure::Fig2, "EIO"},   {"BAROCO", Figure::Fig2, "AOO"},
      {"DISAMIS", Figure::Fig3, "IAI"},   {"DATISI", Figure::Fig3, "AII"},
      {"BOCARDO", Figure::Fig3, "OAO"},   {"FERISON", Figure::Fig3, "EIO"},
  };
  return kMoods;
}

namespace {

std::array<StatementType, 4> preference(Label target) {
  using T = StatementType;
  if (target == Label::Contradiction) return {T::E, T::O, T::A, T::I};
  return {T::I, T::A, T::O, T::E};
}

std::string_view suffix(Label target) {
  return target == Label::Contradiction ? kContraSuffix : kNeutralSuffix;
}

}  // namespace

PatternSchema derive_variant(const PatternSchema& parent, Label target, Semantics sem,
                             std::span<const FigureMood> taken) {
  if (parent.gold != Label::Entailment) {
    throw std::invalid_argument("derive_variant: parent " + parent.name + " is not a valid mood");
  }
  if (target == Label::Entailment) {
    throw std::invalid_argument("derive_variant: target must be contradiction or neutral");
  }

  // 2 = conclusion, 1 = premise2, 0 = premise1
  for (int position : {2, 1, 0}) {
    for (StatementType candidate : preference(target)) {
      Mood mood = parent.mood();
      if (mood.types[position] == candidate) continue;
      mood.types[position] = candidate;
      if (std::find(taken.begin(), taken.end(), FigureMood{parent.figure, mood}) != taken.end()) {
        continue;
      }
      PatternSchema variant =
          make_pattern(parent.name + std::string(suffix(target)), parent.figure, mood, target);
      try {
        if (classify(variant, sem) == target) return variant;
      } catch (const DegeneratePattern&) {
      }
    }
  }
  throw NoVariantFound("no single-statement edit of " + parent.name + " yields " +
                       std::string(to_string(target)) + " under " + std::string(sem.name()) +
                       " semantics");
}

PatternCatalog PatternCatalog::build(Semantics sem) {
  std::vector<PatternSchema> patterns;
  patterns.reserve(named_moods().size() * 3);

  // Two moods can share their first-choice variant (BARBARA and DARII both
  // reach Fig1 AIA as the neutral edit); later moods skip taken pairs.
  std::vector<FigureMood> taken;
  auto add = [&](PatternSchema p) {
    taken.push_back({p.figure, p.mood()});
    patterns.push_back(std::move(p));
  };
  for (const NamedMood& nm : named_moods()) {
    PatternSchema valid =
        make_pattern(std::string(nm.name), nm.figure, Mood::from_code(nm.mood), Label::Entailment);
    add(valid);
    add(derive_variant(valid, Label::Contradiction, sem, taken));
    add(derive_variant(valid, Label::Neutral, sem, taken));
  }

  std::array<int, 3> per_label{};
  std::set<std::pair<int, std::string>> seen;
  for (const PatternSchema& p : patterns) {
    Label oracle;
    try {
      oracle = classify(p, sem);
    } catch (const DegeneratePattern& e) {
      throw CatalogInvariantViolation(p.name + ": " + e.what());
    }
    if (oracle != p.gold) {
      throw CatalogInvariantViolation(p.name + " is declared " + std::string(to_string(p.gold)) +
                                      " but classifies as " + std::string(to_string(oracle)));
    }
    if (!seen.emplace(figure_number(p.figure), p.mood().code()).second) {
      throw CatalogInvariantViolation("duplicate (figure, mood) pair for " + p.name);
    }
    ++per_label[static_cast<int>(p.gold)];
  }
  for (int count : per_label) {
    if (count != static_cast<int>(named_moods().size())) {
      throw CatalogInvariantViolation("catalog is not balanced across labels");
    }
  }
  return PatternCatalog(std::move(patterns), sem);
}

const PatternSchema* PatternCatalog::find(std::string_view name) const {
  for (const auto& p : patterns_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

nlohmann::ordered_json pattern_to_json(const PatternSchema& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["figure"] = figure_number(p.figure);
  j["premise1"] = std::string(1, to_char(p.premise1.type()));
  j["premise2"] = std::string(1, to_char(p.premise2.type()));
  j["conclusion"] = std::string(1, to_char(p.conclusion.type()));
  j["label"] = to_string(p.gold);
  return j;
}

nlohmann::ordered_json PatternCatalog::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kCatalogVersion;
  j["semantics"] = semantics_.name();
  j["patterns"] = nlohmann::ordered_json::array();
  for (const auto& p : patterns_) j["patterns"].push_back(pattern_to_json(p));
  return j;
}

}  // namespace sylloprobe
