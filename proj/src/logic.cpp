#include "sylloprobe/logic.hpp"

#include <algorithm>
#include <stdexcept>

#include "sylloprobe/errors.hpp"

namespace sylloprobe {

char to_char(StatementType t) {
  switch (t) {
    case StatementType::A: return 'A';
    case StatementType::E: return 'E';
    case StatementType::I: return 'I';
    case StatementType::O: return 'O';
  }
  return '?';
}

StatementType statement_type_from_char(char c) {
  switch (c) {
    case 'A': return StatementType::A;
    case 'E': return StatementType::E;
    case 'I': return StatementType::I;
    case 'O': return StatementType::O;
    default: throw std::invalid_argument(std::string("not a statement type: '") + c + "'");
  }
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::Entailment: return "entailment";
    case Label::Contradiction: return "contradiction";
    case Label::Neutral: return "neutral";
  }
  return "?";
}

std::string_view to_string(TermRole role) {
  switch (role) {
    case TermRole::Subject: return "subject";
    case TermRole::Middle: return "middle";
    case TermRole::Predicate: return "predicate";
  }
  return "?";
}

Label label_from_string(std::string_view s) {
  for (Label l : kAllLabels) {
    if (to_string(l) == s) return l;
  }
  throw UnknownLabelString("unknown label string \"" + std::string(s) + "\"");
}

int figure_number(Figure f) { return static_cast<int>(f); }

Figure figure_from_number(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("figure must be 1..4, got " + std::to_string(n));
  return static_cast<Figure>(n);
}

Semantics Semantics::from_name(std::string_view name) {
  if (name == "import") return existential();
  if (name == "modern") return modern();
  throw std::invalid_argument("unknown semantics \"" + std::string(name) +
                              "\" (expected import or modern)");
}

CategoricalStatement::CategoricalStatement(StatementType type, TermRole first, TermRole second)
    : type_(type), first_(first), second_(second) {
  if (first == second) {
    throw std::invalid_argument("categorical statement needs two distinct term roles");
  }
}

std::string Mood::code() const {
  return {to_char(types[0]), to_char(types[1]), to_char(types[2])};
}

Mood Mood::from_code(std::string_view code) {
  if (code.size() != 3) throw std::invalid_argument("mood code must have 3 letters");
  return Mood{{statement_type_from_char(code[0]), statement_type_from_char(code[1]),
               statement_type_from_char(code[2])}};
}

std::vector<Mood> all_moods() {
  std::vector<Mood> out;
  out.reserve(64);
  for (auto a : kAllStatementTypes)
    for (auto b : kAllStatementTypes)
      for (auto c : kAllStatementTypes) out.push_back(Mood{{a, b, c}});
  return out;
}

std::array<RolePair, 2> premise_roles(Figure f) {
  constexpr auto S = TermRole::Subject;
  constexpr auto M = TermRole::Middle;
  constexpr auto P = TermRole::Predicate;
  switch (f) {
    case Figure::Fig1: return {RolePair{M, P}, RolePair{S, M}};
    case Figure::Fig2: return {RolePair{P, M}, RolePair{S, M}};
    case Figure::Fig3: return {RolePair{M, P}, RolePair{M, S}};
    case Figure::Fig4: return {RolePair{P, M}, RolePair{M, S}};
  }
  throw std::invalid_argument("bad figure");
}

std::optional<Figure> figure_of(RolePair p1, RolePair p2) {
  for (Figure f : kAllFigures) {
    auto roles = premise_roles(f);
    if (roles[0] == p1 && roles[1] == p2) return f;
  }
  return std::nullopt;
}

std::array<CategoricalStatement, 3> statements_for(Figure f, const Mood& mood) {
  auto roles = premise_roles(f);
  return {CategoricalStatement{mood.types[0], roles[0].first, roles[0].second},
          CategoricalStatement{mood.types[1], roles[1].first, roles[1].second},
          CategoricalStatement{mood.types[2], TermRole::Subject, TermRole::Predicate}};
}

bool evaluate_statement(const CategoricalStatement& stmt, CellModel model) {
  bool x_and_y = false;
  bool x_not_y = false;
  for (int cell = 0; cell < CellModel::kCells; ++cell) {
    if (!model.inhabited(cell) || !CellModel::cell_in(cell, stmt.first())) continue;
    if (CellModel::cell_in(cell, stmt.second())) {
      x_and_y = true;
    } else {
      x_not_y = true;
    }
  }
  switch (stmt.type()) {
    case StatementType::A: return !x_not_y;
    case StatementType::E: return !x_and_y;
    case StatementType::I: return x_and_y;
    case StatementType::O: return x_not_y;
  }
  return false;
}

namespace {

bool term_nonempty(CellModel model, TermRole role) {
  for (int cell = 0; cell < CellModel::kCells; ++cell) {
    if (model.inhabited(cell) && CellModel::cell_in(cell, role)) return true;
  }
  return false;
}

}  // namespace

std::vector<CellModel> admissible_models(Semantics sem) {
  std::vector<CellModel> out;
  out.reserve(CellModel::kCount);
  for (int mask = 0; mask < CellModel::kCount; ++mask) {
    CellModel m(static_cast<std::uint8_t>(mask));
    if (sem.existential_import &&
        !(term_nonempty(m, TermRole::Subject) && term_nonempty(m, TermRole::Middle) &&
          term_nonempty(m, TermRole::Predicate))) {
      continue;
    }
    out.push_back(m);
  }
  return out;
}

Label classify(const CategoricalStatement& p1, const CategoricalStatement& p2,
               const CategoricalStatement& conclusion, Semantics sem) {
  bool any_premise_model = false;
  bool some_true = false;
  bool some_false = false;
  for (CellModel m : admissible_models(sem)) {
    if (!evaluate_statement(p1, m) || !evaluate_statement(p2, m)) continue;
    any_premise_model = true;
    (evaluate_statement(conclusion, m) ? some_true : some_false) = true;
  }
  if (!any_premise_model) {
    throw DegeneratePattern("premises are jointly unsatisfiable under " +
                            std::string(sem.name()) + " semantics");
  }
  if (!some_false) return Label::Entailment;
  if (!some_true) return Label::Contradiction;
  return Label::Neutral;
}

std::vector<FigureMood> list_valid_moods(std::span<const Figure> figures, Semantics sem) {
  std::vector<Figure> sorted(figures.begin(), figures.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<FigureMood> out;
  for (Figure f : sorted) {
    for (const Mood& mood : all_moods()) {
      auto st = statements_for(f, mood);
      try {
        if (classify(st[0], st[1], st[2], sem) == Label::Entailment) out.push_back({f, mood});
      } catch (const DegeneratePattern&) {
        // unsatisfiable premises are not a valid mood
      }
    }
  }
  return out;
}

}  // namespace sylloprobe
