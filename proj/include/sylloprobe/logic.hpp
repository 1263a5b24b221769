#pragma once

// Categorical statements over three monadic predicates (subject, middle,
// predicate) and a complete decision procedure for the three-way NLI label.
//
// A model of three monadic predicates is characterised, for the purpose of
// evaluating A/E/I/O statements, by which of the 8 Venn cells are inhabited.
// Enumerating the 256 cell masks is therefore a complete decision procedure
// for this fragment.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylloprobe {

enum class StatementType : std::uint8_t { A, E, I, O };
enum class TermRole : std::uint8_t { Subject, Middle, Predicate };
enum class Figure : std::uint8_t { Fig1 = 1, Fig2 = 2, Fig3 = 3, Fig4 = 4 };
enum class Label : std::uint8_t { Entailment, Contradiction, Neutral };

inline constexpr std::array<StatementType, 4> kAllStatementTypes = {
    StatementType::A, StatementType::E, StatementType::I, StatementType::O};
inline constexpr std::array<Figure, 4> kAllFigures = {
    Figure::Fig1, Figure::Fig2, Figure::Fig3, Figure::Fig4};
inline constexpr std::array<Label, 3> kAllLabels = {
    Label::Entailment, Label::Contradiction, Label::Neutral};

char to_char(StatementType t);
StatementType statement_type_from_char(char c);  // throws std::invalid_argument

std::string_view to_string(Label label);
std::string_view to_string(TermRole role);
// Throws UnknownLabelString for anything but the three lowercase names.
Label label_from_string(std::string_view s);

int figure_number(Figure f);
Figure figure_from_number(int n);  // throws std::invalid_argument

// Existential import: when set, every term's extension must be nonempty.
struct Semantics {
  bool existential_import = true;

  static Semantics existential() { return {true}; }
  static Semantics modern() { return {false}; }
  std::string_view name() const { return existential_import ? "import" : "modern"; }
  static Semantics from_name(std::string_view name);  // "import" | "modern"
  friend bool operator==(const Semantics&, const Semantics&) = default;
};

class CategoricalStatement {
 public:
  // Throws std::invalid_argument when first == second.
  CategoricalStatement(StatementType type, TermRole first, TermRole second);

  StatementType type() const { return type_; }
  TermRole first() const { return first_; }
  TermRole second() const { return second_; }

  CategoricalStatement with_type(StatementType t) const { return {t, first_, second_}; }

  friend bool operator==(const CategoricalStatement&, const CategoricalStatement&) = default;

 private:
  StatementType type_;
  TermRole first_;
  TermRole second_;
};

// Premise1, premise2, conclusion statement types, e.g. AAA for BARBARA.
struct Mood {
  std::array<StatementType, 3> types{};

  std::string code() const;
  static Mood from_code(std::string_view code);  // throws std::invalid_argument
  friend auto operator<=>(const Mood&, const Mood&) = default;
};

// All 64 moods in A<E<I<O lexicographic order.
std::vector<Mood> all_moods();

struct RolePair {
  TermRole first;
  TermRole second;
  friend bool operator==(const RolePair&, const RolePair&) = default;
};

// Classical role arrangement of the two premises in each figure.
std::array<RolePair, 2> premise_roles(Figure f);
// The figure whose premise arrangement is exactly (p1, p2), if any.
std::optional<Figure> figure_of(RolePair p1, RolePair p2);

// A set of inhabited Venn cells. Cell index bit 0 = in Subject,
// bit 1 = in Middle, bit 2 = in Predicate.
class CellModel {
 public:
  static constexpr int kCells = 8;
  static constexpr int kCount = 256;

  constexpr CellModel() = default;
  constexpr explicit CellModel(std::uint8_t mask) : mask_(mask) {}

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool inhabited(int cell) const { return (mask_ >> cell) & 1U; }
  static constexpr bool cell_in(int cell, TermRole role) {
    return (cell >> static_cast<int>(role)) & 1;
  }

  friend constexpr bool operator==(CellModel, CellModel) = default;

 private:
  std::uint8_t mask_ = 0;
};

bool evaluate_statement(const CategoricalStatement& stmt, CellModel model);

// Ascending by mask. 256 models without import.
std::vector<CellModel> admissible_models(Semantics sem);

// Throws DegeneratePattern when no admissible model satisfies both premises.
Label classify(const CategoricalStatement& p1, const CategoricalStatement& p2,
               const CategoricalStatement& conclusion, Semantics sem);

// Same contract as classify, decided by enumerating explicit finite
// universes (up to element permutation) of size 0..max_universe. Test oracle;
// shares no code with the cell-mask path. Requires max_universe >= 8.
Label classify_bruteforce(const CategoricalStatement& p1, const CategoricalStatement& p2,
                          const CategoricalStatement& conclusion, Semantics sem,
                          int max_universe = 8);

struct FigureMood {
  Figure figure;
  Mood mood;
  friend bool operator==(const FigureMood&, const FigureMood&) = default;
};

// Statements of a (figure, mood) pair; conclusion is always (Subject, Predicate).
std::array<CategoricalStatement, 3> statements_for(Figure f, const Mood& mood);

// Entailment-classified moods, figure ascending then mood order.
std::vector<FigureMood> list_valid_moods(std::span<const Figure> figures, Semantics sem);

}  // namespace sylloprobe
