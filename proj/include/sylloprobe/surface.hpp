#pragma once

// English surface forms of categorical statements and syllogism samples.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylloprobe/catalog.hpp"
#include "sylloprobe/logic.hpp"

namespace sylloprobe {

enum class TermCategory : std::uint8_t { Occupation, Hobby, Nationality };

std::string_view to_string(TermCategory c);
TermCategory term_category_from_string(std::string_view s);  // throws std::invalid_argument

struct Lexicon {
  std::vector<std::string> occupations;
  std::vector<std::string> hobbies;
  std::vector<std::string> nationalities;

  const std::vector<std::string>& entries(TermCategory c) const;

  // Throws LexiconError on empty entries, punctuation, the words "are"/"not"
  // in positions that would make parsing ambiguous, or case-insensitive
  // duplicates within or across lists.
  void validate() const;

  // The lists shipped under data/lexicons, compiled into the library.
  static Lexicon builtin();
};

// One entry per line; '#' comment lines and blank lines skipped; trailing
// whitespace stripped. Throws IoError when the file cannot be read.
std::vector<std::string> load_lexicon_file(const std::filesystem::path& path);
std::vector<std::string> parse_lexicon_text(std::string_view text);

// Which lexicon category fills each role. Must be a permutation.
struct RoleMapping {
  TermCategory subject = TermCategory::Hobby;
  TermCategory middle = TermCategory::Nationality;
  TermCategory predicate = TermCategory::Occupation;

  TermCategory category(TermRole role) const;
  void validate() const;  // throws std::invalid_argument
};

struct TermAssignment {
  std::string subject;
  std::string middle;
  std::string predicate;

  const std::string& filler(TermRole role) const;
  friend bool operator==(const TermAssignment&, const TermAssignment&) = default;
};

enum class ClausePosition { SentenceInitial, Conjunct };

std::string realize_statement(const CategoricalStatement& stmt, const TermAssignment& terms,
                              ClausePosition position);

struct PremiseHypothesis {
  std::string premise;
  std::string hypothesis;
};

inline constexpr std::string_view kPremiseJoiner = ", and ";

PremiseHypothesis realize_sample(const PatternSchema& pattern, const TermAssignment& terms);

struct ParsedStatement {
  StatementType type;
  std::string first;
  std::string second;
  friend bool operator==(const ParsedStatement&, const ParsedStatement&) = default;
};

// Recognises "All/No/Some X are Y" and "Some X are not Y"; the quantifier is
// matched case-insensitively and a trailing period is tolerated.
// Throws UnparsableStatement.
ParsedStatement parse_statement(std::string_view text);

// A premise/hypothesis pair mapped back to abstract form. Roles are recovered
// from the hypothesis (first filler = subject, second = predicate); the one
// remaining premise filler is the middle term.
struct ParsedSample {
  std::array<CategoricalStatement, 3> statements;  // premise1, premise2, conclusion
  TermAssignment terms;
  std::optional<Figure> figure;  // nullopt when the premises fit no figure

  Mood mood() const;
};

// Throws UnparsableStatement when either text is outside the fragment or the
// fillers do not form a three-term syllogism.
ParsedSample parse_sample(std::string_view premise, std::string_view hypothesis);

}  // namespace sylloprobe
