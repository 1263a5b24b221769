#include "sylloprobe/dataset.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <random>
#include <thread>

#include "sylloprobe/errors.hpp"
#include "sylloprobe/jsonl.hpp"

namespace sylloprobe {
namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

}  // namespace

std::size_t SelectionSizes::of(TermCategory c) const {
  switch (c) {
    case TermCategory::Occupation: return occupations;
    case TermCategory::Hobby: return hobbies;
    case TermCategory::Nationality: return nationalities;
  }
  return 0;
}

std::string sample_id(std::string_view pattern_name, std::size_t s, std::size_t m, std::size_t p) {
  std::string id(pattern_name);
  for (std::size_t index : {s, m, p}) {
    id += '.';
    id += std::to_string(index);
  }
  return id;
}

std::vector<Sample> generate(const PatternCatalog& catalog, const Lexicon& lexicon,
                             const GenerationConfig& config) {
  config.roles.validate();
  lexicon.validate();
  for (auto c : {TermCategory::Occupation, TermCategory::Hobby, TermCategory::Nationality}) {
    const std::size_t want = config.selection.of(c);
    const std::size_t have = lexicon.entries(c).size();
    if (want == 0) throw LexiconTooSmall("selection size for " + std::string(to_string(c)) + " is 0");
    if (have < want) {
      throw LexiconTooSmall(std::string(to_string(c)) + " lexicon has " + std::to_string(have) +
                            " entries, " + std::to_string(want) + " requested");
    }
  }

  const auto& subjects = lexicon.entries(config.roles.subject);
  const auto& middles = lexicon.entries(config.roles.middle);
  const auto& predicates = lexicon.entries(config.roles.predicate);
  const std::size_t ns = config.selection.of(config.roles.subject);
  const std::size_t nm = config.selection.of(config.roles.middle);
  const std::size_t np = config.selection.of(config.roles.predicate);
  const std::size_t per_pattern = ns * nm * np;

  const auto& patterns = catalog.patterns();
  std::vector<Sample> out(patterns.size() * per_pattern);

  parallel_for(patterns.size(), config.jobs, [&](std::size_t pi) {
    const PatternSchema& pattern = patterns[pi];
    const SymmetryFeatures features = extract_features(pattern);
    std::size_t slot = pi * per_pattern;
    for (std::size_t s = 0; s < ns; ++s) {
      for (std::size_t m = 0; m < nm; ++m) {
        for (std::size_t p = 0; p < np; ++p) {
          Sample& sample = out[slot++];
          sample.id = sample_id(pattern.name, s, m, p);
          sample.pattern_name = pattern.name;
          sample.figure = pattern.figure;
          sample.mood = pattern.mood();
          sample.gold = pattern.gold;
          sample.terms = TermAssignment{subjects[s], middles[m], predicates[p]};
          auto text = realize_sample(pattern, sample.terms);
          sample.premise = std::move(text.premise);
          sample.hypothesis = std::move(text.hypothesis);
          sample.features = features;
        }
      }
    }
  });
  return out;
}

void shuffle_samples(std::vector<Sample>& samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Explicit Fisher-Yates: std::shuffle's draws are library-specific.
  for (std::size_t i = samples.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(samples[i - 1], samples[j]);
  }
}

std::string lexicon_hash(const std::vector<std::string>& entries) {
  std::string joined;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) joined += '\n';
    joined += entries[i];
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(joined.data(), joined.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::string hex;
  hex.reserve(len * 2);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

DatasetManifest make_manifest(const PatternCatalog& catalog, const Lexicon& lexicon,
                              const std::vector<Sample>& samples,
                              std::optional<std::uint64_t> shuffle_seed,
                              nlohmann::ordered_json parameters) {
  DatasetManifest m;
  m.catalog_version = std::string(catalog.version());
  m.semantics = catalog.semantics();
  m.lexicon_sha256 = {lexicon_hash(lexicon.occupations), lexicon_hash(lexicon.hobbies),
                      lexicon_hash(lexicon.nationalities)};
  m.sample_count = samples.size();
  for (const Sample& s : samples) ++m.per_label[static_cast<int>(s.gold)];
  m.shuffle_seed = shuffle_seed;
  m.parameters = std::move(parameters);
  return m;
}

nlohmann::ordered_json DatasetManifest::to_json() const {
  nlohmann::ordered_json j;
  j["catalog_version"] = catalog_version;
  j["semantics"] = semantics.name();
  j["lexicon_sha256"] = {{"occupations", lexicon_sha256[0]},
                         {"hobbies", lexicon_sha256[1]},
                         {"nationalities", lexicon_sha256[2]}};
  j["sample_count"] = sample_count;
  nlohmann::ordered_json labels;
  for (Label l : kAllLabels) labels[std::string(to_string(l))] = per_label[static_cast<int>(l)];
  j["per_label"] = labels;
  j["shuffle_seed"] = shuffle_seed ? nlohmann::ordered_json(*shuffle_seed) : nlohmann::ordered_json(nullptr);
  j["parameters"] = parameters;
  return j;
}

nlohmann::ordered_json sample_to_json(const Sample& s) {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["pattern"] = s.pattern_name;
  j["figure"] = figure_number(s.figure);
  j["mood"] = s.mood.code();
  j["label"] = to_string(s.gold);
  j["premise"] = s.premise;
  j["hypothesis"] = s.hypothesis;
  j["subject"] = s.terms.subject;
  j["middle"] = s.terms.middle;
  j["predicate"] = s.terms.predicate;
  j["features"] = features_to_json(s.features);
  return j;
}

std::string sample_to_jsonl_line(const Sample& s) {
  std::string line = sample_to_json(s).dump();
  line += '\n';
  return line;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string sample_to_csv_row(const Sample& s) {
  const std::string fields[] = {s.id,
                                s.pattern_name,
                                std::to_string(figure_number(s.figure)),
                                s.mood.code(),
                                std::string(to_string(s.gold)),
                                s.premise,
                                s.hypothesis,
                                s.terms.subject,
                                s.terms.middle,
                                s.terms.predicate,
                                features_to_json(s.features).dump()};
  std::string row;
  for (std::size_t i = 0; i < std::size(fields); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  row += "\r\n";
  return row;
}

template <typename Render>
std::string render_parallel(const std::vector<Sample>& samples, unsigned jobs, Render&& render) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (samples.size() + kChunk - 1) / kChunk;
  std::vector<std::string> parts(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::size_t end = std::min(samples.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) parts[c] += render(samples[i]);
  });
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::string out;
  out.reserve(total);
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace

DatasetFiles write_dataset(const std::vector<Sample>& samples, const DatasetManifest& manifest,
                           const std::filesystem::path& out_dir, bool with_csv, unsigned jobs) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory " + out_dir.string() + ": " + ec.message());

  DatasetFiles files{out_dir / kDatasetFile, out_dir / kManifestFile, std::nullopt};
  write_text_file(files.dataset, render_parallel(samples, jobs, sample_to_jsonl_line));
  write_text_file(files.manifest, manifest.to_json().dump(2) + "\n");
  if (with_csv) {
    files.csv = out_dir / kCsvFile;
    std::string csv =
        "id,pattern,figure,mood,label,premise,hypothesis,subject,middle,predicate,features\r\n";
    csv += render_parallel(samples, jobs, sample_to_csv_row);
    write_text_file(*files.csv, csv);
  }
  return files;
}

DatasetRow dataset_row_from_json(const nlohmann::json& j, std::size_t line) {
  auto where = [&] { return "line " + std::to_string(line) + ": "; };
  if (!j.is_object()) throw SchemaError(where() + "row is not a JSON object");
  auto text = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
      throw SchemaError(where() + "missing string field \"" + key + "\"");
    }
    return it->get<std::string>();
  };
  DatasetRow row;
  row.line = line;
  row.id = text("id");
  row.pattern = j.contains("pattern") && j["pattern"].is_string() ? j["pattern"].get<std::string>()
                                                                  : std::string();
  try {
    row.gold = label_from_string(text("label"));
  } catch (const UnknownLabelString& e) {
    throw UnknownLabelString(where() + e.what());
  }
  row.premise = text("premise");
  row.hypothesis = text("hypothesis");
  return row;
}

std::vector<DatasetRow> read_dataset(const std::filesystem::path& path) {
  std::vector<DatasetRow> rows;
  for_each_line(path, [&](std::size_t line, std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError("line " + std::to_string(line) + ": invalid JSON: " + e.what());
    }
    rows.push_back(dataset_row_from_json(j, line));
  });
  return rows;
}

nlohmann::ordered_json ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["rows"] = rows;
  j["agreements"] = agreements;
  j["ok"] = ok();
  j["disagreements"] = nlohmann::ordered_json::array();
  for (const auto& d : disagreements) {
    j["disagreements"].push_back(
        {{"line", d.line}, {"id", d.id}, {"stored", to_string(d.stored)}, {"oracle", to_string(d.oracle)}});
  }
  auto issues = [](const std::vector<ValidationIssue>& list) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& i : list) arr.push_back({{"line", i.line}, {"id", i.id}, {"detail", i.detail}});
    return arr;
  };
  j["unparsable"] = issues(unparsable);
  j["schema_errors"] = issues(schema_errors);
  return j;
}

ValidationReport validate_dataset(const std::filesystem::path& dataset, Semantics sem) {
  ValidationReport report;
  for_each_line(dataset, [&](std::size_t line, std::string_view text) {
    ++report.rows;
    DatasetRow row;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      row = dataset_row_from_json(j, line);
    } catch (const nlohmann::json::exception& e) {
      report.schema_errors.push_back({line, "", std::string("invalid JSON: ") + e.what()});
      return;
    } catch (const SchemaError& e) {
      std::string id = j.is_object() && j.contains("id") && j["id"].is_string()
                           ? j["id"].get<std::string>() : std::string();
      report.schema_errors.push_back({line, std::move(id), e.what()});
      return;
    }

    std::optional<ParsedSample> maybe;
    try {
      maybe = parse_sample(row.premise, row.hypothesis);
    } catch (const UnparsableStatement& e) {
      report.unparsable.push_back({line, row.id, e.what()});
      return;
    }
    const ParsedSample& parsed = *maybe;

    for (const char* role : {"subject", "middle", "predicate"}) {
      if (!j.contains(role)) continue;
      const std::string& parsed_filler =
          parsed.terms.filler(role[0] == 's' ? TermRole::Subject
                              : role[0] == 'm' ? TermRole::Middle : TermRole::Predicate);
      if (!j[role].is_string() || j[role].get<std::string>() != parsed_filler) {
        report.schema_errors.push_back(
            {line, row.id, std::string("stored ") + role + " does not match the text"});
        return;
      }
    }

    Label oracle;
    try {
      oracle = classify(parsed.statements[0], parsed.statements[1], parsed.statements[2], sem);
    } catch (const DegeneratePattern& e) {
      report.schema_errors.push_back({line, row.id, std::string("degenerate premises: ") + e.what()});
      return;
    }
    if (oracle == row.gold) {
      ++report.agreements;
    } else {
      report.disagreements.push_back({line, row.id, row.gold, oracle});
    }
  });
  return report;
}

}  // namespace sylloprobe
