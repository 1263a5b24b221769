#include "sylloprobe/surface.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "builtin_lexicons.hpp"
#include "sylloprobe/errors.hpp"

namespace sylloprobe {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(lower(w));
  return out;
}

constexpr std::string_view kPunctuation = ".,;:!?\"";

}  // namespace

std::string_view to_string(TermCategory c) {
  switch (c) {
    case TermCategory::Occupation: return "occupation";
    case TermCategory::Hobby: return "hobby";
    case TermCategory::Nationality: return "nationality";
  }
  return "?";
}

TermCategory term_category_from_string(std::string_view s) {
  for (auto c : {TermCategory::Occupation, TermCategory::Hobby, TermCategory::Nationality}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown term category \"" + std::string(s) +
                              "\" (expected occupation, hobby or nationality)");
}

const std::vector<std::string>& Lexicon::entries(TermCategory c) const {
  switch (c) {
    case TermCategory::Occupation: return occupations;
    case TermCategory::Hobby: return hobbies;
    case TermCategory::Nationality: return nationalities;
  }
  throw std::invalid_argument("bad term category");
}

void Lexicon::validate() const {
  std::set<std::string> seen;
  for (auto c : {TermCategory::Occupation, TermCategory::Hobby, TermCategory::Nationality}) {
    for (const std::string& entry : entries(c)) {
      const std::string where = std::string(to_string(c)) + " entry \"" + entry + "\"";
      if (trim(entry).empty()) throw LexiconError("empty " + std::string(to_string(c)) + " entry");
      if (trim(entry) != entry) throw LexiconError(where + " has surrounding whitespace");
      if (entry.find_first_of(kPunctuation) != std::string::npos) {
        throw LexiconError(where + " contains sentence punctuation");
      }
      auto ws = words(entry);
      if (std::find(ws.begin(), ws.end(), "are") != ws.end()) {
        throw LexiconError(where + " contains the copula \"are\"");
      }
      if (ws.front() == "not") throw LexiconError(where + " starts with \"not\"");
      if (!seen.insert(lower(entry)).second) throw LexiconError("duplicate " + where);
    }
  }
}

Lexicon Lexicon::builtin() {
  return Lexicon{parse_lexicon_text(detail::builtin_lexicon_text(TermCategory::Occupation)),
                 parse_lexicon_text(detail::builtin_lexicon_text(TermCategory::Hobby)),
                 parse_lexicon_text(detail::builtin_lexicon_text(TermCategory::Nationality))};
}

std::vector<std::string> parse_lexicon_text(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    std::string_view v = line;
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    if (v.empty() || v.front() == '#') continue;
    out.emplace_back(v);
  }
  return out;
}

std::vector<std::string> load_lexicon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read lexicon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon_text(buf.str());
}

TermCategory RoleMapping::category(TermRole role) const {
  switch (role) {
    case TermRole::Subject: return subject;
    case TermRole::Middle: return middle;
    case TermRole::Predicate: return predicate;
  }
  throw std::invalid_argument("bad term role");
}

void RoleMapping::validate() const {
  if (subject == middle || subject == predicate || middle == predicate) {
    throw std::invalid_argument("role mapping must assign a different category to each role");
  }
}

const std::string& TermAssignment::filler(TermRole role) const {
  switch (role) {
    case TermRole::Subject: return subject;
    case TermRole::Middle: return middle;
    case TermRole::Predicate: return predicate;
  }
  throw std::invalid_argument("bad term role");
}

std::string realize_statement(const CategoricalStatement& stmt, const TermAssignment& terms,
                              ClausePosition position) {
  const bool initial = position == ClausePosition::SentenceInitial;
  std::string_view quantifier;
  std::string_view copula = " are ";
  switch (stmt.type()) {
    case StatementType::A: quantifier = initial ? "All" : "all"; break;
    case StatementType::E: quantifier = initial ? "No" : "no"; break;
    case StatementType::I: quantifier = initial ? "Some" : "some"; break;
    case StatementType::O:
      quantifier = initial ? "Some" : "some";
      copula = " are not ";
      break;
  }
  std::string out(quantifier);
  out += ' ';
  out += terms.filler(stmt.first());
  out += copula;
  out += terms.filler(stmt.second());
  return out;
}

PremiseHypothesis realize_sample(const PatternSchema& pattern, const TermAssignment& terms) {
  PremiseHypothesis out;
  out.premise = realize_statement(pattern.premise1, terms, ClausePosition::SentenceInitial);
  out.premise += kPremiseJoiner;
  out.premise += realize_statement(pattern.premise2, terms, ClausePosition::Conjunct);
  out.premise += '.';
  out.hypothesis = realize_statement(pattern.conclusion, terms, ClausePosition::SentenceInitial);
  out.hypothesis += '.';
  return out;
}

ParsedStatement parse_statement(std::string_view text) {
  const std::string original(text);
  auto fail = [&](const std::string& why) -> UnparsableStatement {
    return UnparsableStatement("cannot parse \"" + original + "\": " + why);
  };

  std::string_view s = trim(text);
  if (!s.empty() && s.back() == '.') s = trim(s.substr(0, s.size() - 1));

  const auto space = s.find(' ');
  if (space == std::string_view::npos) throw fail("not a categorical statement");
  const std::string quantifier = lower(s.substr(0, space));
  std::string_view rest = s.substr(space + 1);

  StatementType type;
  std::size_t split;
  std::size_t copula_len;
  const auto negated = rest.find(" are not ");
  if (quantifier == "some" && negated != std::string_view::npos) {
    type = StatementType::O;
    split = negated;
    copula_len = 9;
  } else {
    split = rest.find(" are ");
    copula_len = 5;
    if (quantifier == "all") {
      type = StatementType::A;
    } else if (quantifier == "no") {
      type = StatementType::E;
    } else if (quantifier == "some") {
      type = StatementType::I;
    } else {
      throw fail("not a categorical statement");
    }
    if (negated != std::string_view::npos) throw fail("negated copula after \"" + quantifier + "\"");
  }
  if (split == std::string_view::npos) throw fail("missing copula \"are\"");

  std::string_view first = rest.substr(0, split);
  std::string_view second = rest.substr(split + copula_len);
  if (trim(first).empty() || trim(second).empty()) throw fail("empty term");
  if (trim(first) != first || trim(second) != second) throw fail("stray whitespace around term");
  for (std::string_view term : {first, second}) {
    if (term.find_first_of(kPunctuation) != std::string_view::npos) {
      throw fail("punctuation inside a term");
    }
    auto ws = words(term);
    if (std::find(ws.begin(), ws.end(), "are") != ws.end()) throw fail("more than one copula");
  }
  return ParsedStatement{type, std::string(first), std::string(second)};
}

Mood ParsedSample::mood() const {
  return Mood{{statements[0].type(), statements[1].type(), statements[2].type()}};
}

ParsedSample parse_sample(std::string_view premise, std::string_view hypothesis) {
  std::string_view p = trim(premise);
  if (!p.empty() && p.back() == '.') p.remove_suffix(1);
  const auto join = p.find(kPremiseJoiner);
  if (join == std::string_view::npos || p.find(kPremiseJoiner, join + 1) != std::string_view::npos) {
    throw UnparsableStatement("premise \"" + std::string(premise) +
                              "\" is not two clauses joined by \", and \"");
  }
  const ParsedStatement first = parse_statement(p.substr(0, join));
  const ParsedStatement second = parse_statement(p.substr(join + kPremiseJoiner.size()));
  const ParsedStatement concl = parse_statement(hypothesis);

  if (concl.first == concl.second) {
    throw UnparsableStatement("hypothesis relates a term to itself: \"" + std::string(hypothesis) +
                              "\"");
  }
  TermAssignment terms{concl.first, "", concl.second};
  for (const auto* st : {&first, &second}) {
    for (const std::string* f : {&st->first, &st->second}) {
      if (*f == terms.subject || *f == terms.predicate) continue;
      if (terms.middle.empty()) {
        terms.middle = *f;
      } else if (*f != terms.middle) {
        throw UnparsableStatement("premise mentions more than three terms: \"" +
                                  std::string(premise) + "\"");
      }
    }
  }
  if (terms.middle.empty()) {
    throw UnparsableStatement("premise has no middle term: \"" + std::string(premise) + "\"");
  }

  auto role_of = [&](const std::string& f) {
    if (f == terms.subject) return TermRole::Subject;
    if (f == terms.predicate) return TermRole::Predicate;
    return TermRole::Middle;
  };
  auto to_statement = [&](const ParsedStatement& st) {
    const TermRole a = role_of(st.first);
    const TermRole b = role_of(st.second);
    if (a == b) throw UnparsableStatement("statement relates a term to itself: " + st.first);
    if (a != TermRole::Middle && b != TermRole::Middle) {
      throw UnparsableStatement("premise clause lacks the middle term: " + st.first + " / " +
                                st.second);
    }
    return CategoricalStatement{st.type, a, b};
  };

  const CategoricalStatement p1 = to_statement(first);
  const CategoricalStatement p2 = to_statement(second);
  const CategoricalStatement c{concl.type, TermRole::Subject, TermRole::Predicate};
  return ParsedSample{{p1, p2, c},
                      std::move(terms),
                      figure_of({p1.first(), p1.second()}, {p2.first(), p2.second()})};
}

}  // namespace sylloprobe
