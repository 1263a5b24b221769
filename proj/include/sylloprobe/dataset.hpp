#pragma once

// Probe dataset generation, serialization and self-validation.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sylloprobe/catalog.hpp"
#include "sylloprobe/heuristic.hpp"
#include "sylloprobe/surface.hpp"

namespace sylloprobe {

struct Sample {
  std::string id;
  std::string pattern_name;
  Figure figure;
  Mood mood;
  Label gold;
  std::string premise;
  std::string hypothesis;
  TermAssignment terms;
  SymmetryFeatures features;
};

// Number of entries taken from the head of each lexicon list.
struct SelectionSizes {
  std::size_t occupations = 15;
  std::size_t hobbies = 15;
  std::size_t nationalities = 15;

  std::size_t of(TermCategory c) const;
};

struct GenerationConfig {
  SelectionSizes selection;
  RoleMapping roles;
  // Internal worker threads. Output never depends on this.
  unsigned jobs = 1;
};

// "{pattern}.{s}.{m}.{p}" with zero-based indices into each role's selection.
std::string sample_id(std::string_view pattern_name, std::size_t s, std::size_t m, std::size_t p);

// Patterns in catalog order, then (s, m, p) index triples lexicographically.
// Throws LexiconTooSmall, LexiconError, std::invalid_argument (bad mapping).
std::vector<Sample> generate(const PatternCatalog& catalog, const Lexicon& lexicon,
                             const GenerationConfig& config);

// Seeded Fisher-Yates permutation of the sample order.
void shuffle_samples(std::vector<Sample>& samples, std::uint64_t seed);

struct DatasetManifest {
  std::string catalog_version;
  Semantics semantics;
  std::array<std::string, 3> lexicon_sha256;  // occupations, hobbies, nationalities
  std::size_t sample_count = 0;
  std::array<std::size_t, 3> per_label{};  // indexed by Label
  std::optional<std::uint64_t> shuffle_seed;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

// SHA-256 (hex) over the entries joined by '\n'.
std::string lexicon_hash(const std::vector<std::string>& entries);

DatasetManifest make_manifest(const PatternCatalog& catalog, const Lexicon& lexicon,
                              const std::vector<Sample>& samples,
                              std::optional<std::uint64_t> shuffle_seed,
                              nlohmann::ordered_json parameters);

nlohmann::ordered_json sample_to_json(const Sample& s);
std::string sample_to_jsonl_line(const Sample& s);

inline constexpr const char* kDatasetFile = "dataset.jsonl";
inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kCsvFile = "dataset.csv";

struct DatasetFiles {
  std::filesystem::path dataset;
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> csv;
};

// Writes dataset.jsonl and manifest.json (and dataset.csv when requested)
// into `out_dir`, creating it if needed. Throws IoError with the path.
DatasetFiles write_dataset(const std::vector<Sample>& samples, const DatasetManifest& manifest,
                           const std::filesystem::path& out_dir, bool with_csv = false,
                           unsigned jobs = 1);

// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

struct ValidationIssue {
  std::size_t line = 0;  // 1-based
  std::string id;
  std::string detail;
};

struct LabelDisagreement {
  std::size_t line = 0;
  std::string id;
  Label stored;
  Label oracle;
};

struct ValidationReport {
  std::size_t rows = 0;
  std::size_t agreements = 0;
  std::vector<LabelDisagreement> disagreements;
  std::vector<ValidationIssue> unparsable;
  std::vector<ValidationIssue> schema_errors;

  bool ok() const { return disagreements.empty() && unparsable.empty() && schema_errors.empty(); }
  nlohmann::ordered_json to_json() const;
};

// Re-parses each row's text and re-derives its label. Bad rows are collected,
// never thrown. Throws IoError if the file cannot be opened.
ValidationReport validate_dataset(const std::filesystem::path& dataset, Semantics sem);

// One parsed dataset row as the harness and simulator need it.
struct DatasetRow {
  std::size_t line = 0;
  std::string id;
  std::string pattern;
  Label gold;
  std::string premise;
  std::string hypothesis;
};

// Throws SchemaError (with line number) for malformed rows.
DatasetRow dataset_row_from_json(const nlohmann::json& j, std::size_t line);

std::vector<DatasetRow> read_dataset(const std::filesystem::path& path);

}  // namespace sylloprobe
