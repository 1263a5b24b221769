// Explicit-universe decision procedure. Each element of a finite universe is
// given a membership triple (in S?, in M?, in P?) and statements are checked
// element by element with first-order quantifier semantics. Universes are
// enumerated up to permutation of elements (non-decreasing assignment
// sequences), which visits every isomorphism class of size <= max_universe.

#include <stdexcept>
#include <string>
#include <vector>

#include "sylloprobe/errors.hpp"
#include "sylloprobe/logic.hpp"

namespace sylloprobe {
namespace {

struct Element {
  bool s;
  bool m;
  bool p;

  bool has(TermRole role) const {
    switch (role) {
      case TermRole::Subject: return s;
      case TermRole::Middle: return m;
      case TermRole::Predicate: return p;
    }
    return false;
  }
};

using Universe = std::vector<Element>;

bool holds(const CategoricalStatement& st, const Universe& u) {
  const TermRole x = st.first();
  const TermRole y = st.second();
  switch (st.type()) {
    case StatementType::A:  // forall e. X(e) -> Y(e)
      for (const auto& e : u)
        if (e.has(x) && !e.has(y)) return false;
      return true;
    case StatementType::E:  // forall e. X(e) -> !Y(e)
      for (const auto& e : u)
        if (e.has(x) && e.has(y)) return false;
      return true;
    case StatementType::I:  // exists e. X(e) & Y(e)
      for (const auto& e : u)
        if (e.has(x) && e.has(y)) return true;
      return false;
    case StatementType::O:  // exists e. X(e) & !Y(e)
      for (const auto& e : u)
        if (e.has(x) && !e.has(y)) return true;
      return false;
  }
  return false;
}

bool every_term_nonempty(const Universe& u) {
  bool s = false, m = false, p = false;
  for (const auto& e : u) {
    s |= e.s;
    m |= e.m;
    p |= e.p;
  }
  return s && m && p;
}

Element element_of_kind(int kind) {
  return Element{(kind & 1) != 0, (kind & 2) != 0, (kind & 4) != 0};
}

struct Tally {
  bool any_premise_model = false;
  bool some_true = false;
  bool some_false = false;
};

void visit(const CategoricalStatement& p1, const CategoricalStatement& p2,
           const CategoricalStatement& c, Semantics sem, Universe& u, int min_kind,
           int remaining, Tally& tally) {
  if (!(sem.existential_import && !every_term_nonempty(u)) && holds(p1, u) && holds(p2, u)) {
    tally.any_premise_model = true;
    (holds(c, u) ? tally.some_true : tally.some_false) = true;
  }
  if (remaining == 0 || (tally.some_true && tally.some_false)) return;
  for (int kind = min_kind; kind < 8; ++kind) {
    u.push_back(element_of_kind(kind));
    visit(p1, p2, c, sem, u, kind, remaining - 1, tally);
    u.pop_back();
  }
}

}  // namespace

Label classify_bruteforce(const CategoricalStatement& p1, const CategoricalStatement& p2,
                          const CategoricalStatement& conclusion, Semantics sem,
                          int max_universe) {
  if (max_universe < 8) {
    throw std::invalid_argument("max_universe must be at least 8, got " +
                                std::to_string(max_universe));
  }
  Universe u;
  Tally tally;
  visit(p1, p2, conclusion, sem, u, 0, max_universe, tally);
  if (!tally.any_premise_model) {
    throw DegeneratePattern("premises have no model with at most " +
                            std::to_string(max_universe) + " elements");
  }
  if (!tally.some_false) return Label::Entailment;
  if (!tally.some_true) return Label::Contradiction;
  return Label::Neutral;
}

}  // namespace sylloprobe
