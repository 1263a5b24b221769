#include "sylloprobe/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>

#include "sylloprobe/catalog.hpp"
#include "sylloprobe/dataset.hpp"
#include "sylloprobe/errors.hpp"
#include "sylloprobe/eval.hpp"
#include "sylloprobe/heuristic.hpp"
#include "sylloprobe/jsonl.hpp"
#include "sylloprobe/surface.hpp"

namespace sylloprobe {
namespace {

namespace fs = std::filesystem;

// Every flag of every subcommand; serialized into the artifacts a run writes.
struct RunConfig {
  std::string subcommand;
  std::string semantics = "import";
  unsigned jobs = 1;

  // patterns
  std::string patterns_format = "table";
  std::string output;

  // generate
  std::string out_dir;
  std::string occupations_file;
  std::string hobbies_file;
  std::string nationalities_file;
  std::optional<std::size_t> select_all;
  std::size_t select_occupations = 15;
  std::size_t select_hobbies = 15;
  std::size_t select_nationalities = 15;
  std::string subject_category = "hobby";
  std::string middle_category = "nationality";
  std::string predicate_category = "occupation";
  std::optional<std::uint64_t> shuffle_seed;
  bool csv = false;

  // validate / simulate / evaluate
  std::string dataset;
  std::string report;
  std::string predictions;
  std::string summary;
  std::string policy = "conjunctive";
  std::vector<std::string> formats;
  std::string out_prefix;
  bool symmetry = false;

  // label
  std::string premise;
  std::string hypothesis;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    j["semantics"] = semantics;
    j["jobs"] = jobs;
    if (subcommand == "generate") {
      j["out_dir"] = out_dir;
      j["lexicons"] = {{"occupations", occupations_file.empty() ? "(builtin)" : occupations_file},
                       {"hobbies", hobbies_file.empty() ? "(builtin)" : hobbies_file},
                       {"nationalities",
                        nationalities_file.empty() ? "(builtin)" : nationalities_file}};
      j["selection"] = {{"occupations", select_occupations},
                        {"hobbies", select_hobbies},
                        {"nationalities", select_nationalities}};
      j["roles"] = {{"subject", subject_category},
                    {"middle", middle_category},
                    {"predicate", predicate_category}};
      j["shuffle_seed"] = shuffle_seed ? nlohmann::ordered_json(*shuffle_seed) : nlohmann::ordered_json(nullptr);
      j["csv"] = csv;
    } else if (subcommand == "simulate") {
      j["dataset"] = dataset;
      j["policy"] = policy;
      j["output"] = output;
      j["summary"] = summary;
    } else if (subcommand == "evaluate") {
      j["dataset"] = dataset;
      j["predictions"] = predictions;
      j["policy"] = policy;
      j["formats"] = formats;
      j["out_prefix"] = out_prefix;
    } else if (subcommand == "validate") {
      j["dataset"] = dataset;
    }
    return j;
  }
};

fs::path default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return "out";
}

std::vector<std::string> load_or_builtin(const std::string& path,
                                         const std::vector<std::string>& builtin) {
  return path.empty() ? builtin : load_lexicon_file(path);
}

int cmd_patterns(const RunConfig& cfg, std::ostream& out) {
  const PatternCatalog catalog = build_catalog(Semantics::from_name(cfg.semantics));
  std::string text;
  if (cfg.patterns_format == "json") {
    text = catalog.to_json().dump(2) + "\n";
  } else {
    std::ostringstream table;
    table << std::left << std::setw(18) << "name" << std::setw(8) << "figure" << std::setw(6)
          << "mood"
          << "label\n";
    for (const auto& p : catalog.patterns()) {
      table << std::left << std::setw(18) << p.name << std::setw(8) << figure_number(p.figure)
            << std::setw(6) << p.mood().code() << to_string(p.gold) << "\n";
    }
    text = table.str();
  }
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_text_file(cfg.output, text);
  }
  return kExitOk;
}

int cmd_generate(RunConfig cfg, std::ostream& out) {
  if (cfg.select_all) {
    cfg.select_occupations = cfg.select_hobbies = cfg.select_nationalities = *cfg.select_all;
  }
  if (cfg.out_dir.empty()) cfg.out_dir = default_out_dir().string();

  const Semantics sem = Semantics::from_name(cfg.semantics);
  const Lexicon builtin = Lexicon::builtin();
  const Lexicon lexicon{load_or_builtin(cfg.occupations_file, builtin.occupations),
                        load_or_builtin(cfg.hobbies_file, builtin.hobbies),
                        load_or_builtin(cfg.nationalities_file, builtin.nationalities)};

  GenerationConfig gen;
  gen.selection = {cfg.select_occupations, cfg.select_hobbies, cfg.select_nationalities};
  gen.roles = {term_category_from_string(cfg.subject_category),
               term_category_from_string(cfg.middle_category),
               term_category_from_string(cfg.predicate_category)};
  gen.jobs = cfg.jobs;

  const PatternCatalog catalog = build_catalog(sem);
  std::vector<Sample> samples = generate(catalog, lexicon, gen);
  if (cfg.shuffle_seed) shuffle_samples(samples, *cfg.shuffle_seed);

  const DatasetManifest manifest =
      make_manifest(catalog, lexicon, samples, cfg.shuffle_seed, cfg.to_json());
  const DatasetFiles files = write_dataset(samples, manifest, cfg.out_dir, cfg.csv, cfg.jobs);

  out << "wrote " << manifest.sample_count << " samples to " << files.dataset.string() << "\n";
  for (Label l : kAllLabels) {
    out << "  " << to_string(l) << ": " << manifest.per_label[static_cast<int>(l)] << "\n";
  }
  out << "manifest: " << files.manifest.string() << "\n";
  if (files.csv) out << "csv: " << files.csv->string() << "\n";
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const ValidationReport report = validate_dataset(cfg.dataset, Semantics::from_name(cfg.semantics));
  out << "rows: " << report.rows << "\n"
      << "agreements: " << report.agreements << "\n"
      << "disagreements: " << report.disagreements.size() << "\n"
      << "unparsable: " << report.unparsable.size() << "\n"
      << "schema errors: " << report.schema_errors.size() << "\n";
  for (const auto& d : report.disagreements) {
    out << "  line " << d.line << " " << d.id << ": stored " << to_string(d.stored)
        << ", oracle " << to_string(d.oracle) << "\n";
  }
  for (const auto& u : report.unparsable) out << "  line " << u.line << " unparsable: " << u.detail << "\n";
  for (const auto& s : report.schema_errors) out << "  line " << s.line << " schema: " << s.detail << "\n";
  if (!cfg.report.empty()) {
    auto j = report.to_json();
    j["run_config"] = cfg.to_json();
    write_text_file(cfg.report, j.dump(2) + "\n");
  }
  return report.ok() ? kExitOk : kExitDisagreement;
}

int cmd_label(const RunConfig& cfg, std::ostream& out) {
  const ParsedSample parsed = parse_sample(cfg.premise, cfg.hypothesis);
  const Label label = classify(parsed.statements[0], parsed.statements[1], parsed.statements[2],
                               Semantics::from_name(cfg.semantics));
  out << to_string(label) << "\n";
  return kExitOk;
}

int cmd_simulate(RunConfig cfg, std::ostream& out) {
  const HeuristicPolicy policy = heuristic_policy_from_string(cfg.policy);
  if (cfg.output.empty()) cfg.output = (default_out_dir() / "predictions.heuristic.jsonl").string();
  if (cfg.summary.empty()) {
    fs::path p(cfg.output);
    cfg.summary = (p.parent_path() / (p.stem().string() + ".summary.json")).string();
  }
  if (auto parent = fs::path(cfg.output).parent_path(); !parent.empty()) {
    std::error_code ec;
    fs::create_directories(parent, ec);
    if (ec) throw IoError("cannot create directory " + parent.string() + ": " + ec.message());
  }
  const SimulationSummary summary = simulate(cfg.dataset, cfg.output, policy);
  auto j = summary.to_json();
  j["run_config"] = cfg.to_json();
  write_text_file(cfg.summary, j.dump(2) + "\n");

  out << "wrote " << summary.samples << " heuristic predictions (" << to_string(policy)
      << ") to " << cfg.output << "\n";
  for (Label gold : kAllLabels) {
    const auto& row = summary.counts[static_cast<int>(gold)];
    out << "  gold " << to_string(gold) << ":";
    for (Label pred : kAllLabels) out << " " << to_string(pred) << "=" << row[static_cast<int>(pred)];
    out << "\n";
  }
  return kExitOk;
}

int cmd_evaluate(RunConfig cfg, std::ostream& out) {
  const HeuristicPolicy policy = heuristic_policy_from_string(cfg.policy);
  if (cfg.formats.empty()) cfg.formats = {"markdown"};
  std::vector<ReportFormat> formats;
  for (const auto& f : cfg.formats) formats.push_back(report_format_from_string(f));

  const EvalReport report = evaluate(cfg.dataset, cfg.predictions, policy);

  auto render = [&](ReportFormat f) {
    if (f != ReportFormat::Json) return render_report(report, f);
    auto j = report_to_json(report);
    j["run_config"] = cfg.to_json();
    return j.dump(2) + "\n";
  };

  if (cfg.out_prefix.empty()) {
    for (ReportFormat f : formats) out << render(f);
  } else {
    for (ReportFormat f : formats) {
      const std::string path = cfg.out_prefix + "." + std::string(extension(f));
      write_text_file(path, render(f));
      out << "wrote " << path << "\n";
    }
  }
  if (cfg.symmetry) {
    out << "symmetry (" << to_string(policy) << "):\n";
    for (auto [name, dist] : {std::pair{"symmetric", &report.symmetry.symmetric},
                              std::pair{"asymmetric", &report.symmetry.asymmetric}}) {
      out << "  " << name << " n=" << dist->total();
      for (Label l : kAllLabels) {
        out << " " << to_string(l) << "=" << std::fixed << std::setprecision(2)
            << round2(dist->percent(l)) << "%";
      }
      out << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syllogistic NLI probe toolkit", args.empty() ? "sylloprobe" : args.front()};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> semantics_choices = {"import", "modern"};
  const std::vector<std::string> policy_choices = {"conjunctive", "disjunctive"};
  const std::vector<std::string> categories = {"occupation", "hobby", "nationality"};
  auto add_semantics = [&](CLI::App* sub) {
    sub->add_option("--semantics", cfg.semantics,
                    "import = nonempty terms (default), modern = empty terms allowed")
        ->check(CLI::IsMember(semantics_choices));
  };

  auto* patterns = app.add_subcommand("patterns", "Print or serialize the 36-pattern catalog");
  add_semantics(patterns);
  patterns->add_option("--format", cfg.patterns_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  patterns->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");

  auto* gen = app.add_subcommand("generate", "Emit the probe dataset and its manifest");
  add_semantics(gen);
  gen->add_option("--out", cfg.out_dir,
                  std::string("Output directory (default $") + kOutDirEnv + " or ./out)");
  gen->add_option("--occupations", cfg.occupations_file, "Occupation lexicon file")->check(CLI::ExistingFile);
  gen->add_option("--hobbies", cfg.hobbies_file, "Hobby lexicon file")->check(CLI::ExistingFile);
  gen->add_option("--nationalities", cfg.nationalities_file, "Nationality lexicon file")
      ->check(CLI::ExistingFile);
  gen->add_option("--select", cfg.select_all, "Entries taken from every lexicon")
      ->check(CLI::PositiveNumber);
  gen->add_option("--select-occupations", cfg.select_occupations)->check(CLI::PositiveNumber);
  gen->add_option("--select-hobbies", cfg.select_hobbies)->check(CLI::PositiveNumber);
  gen->add_option("--select-nationalities", cfg.select_nationalities)->check(CLI::PositiveNumber);
  gen->add_option("--subject", cfg.subject_category, "Category filling the subject term")
      ->check(CLI::IsMember(categories));
  gen->add_option("--middle", cfg.middle_category, "Category filling the middle term")
      ->check(CLI::IsMember(categories));
  gen->add_option("--predicate", cfg.predicate_category, "Category filling the predicate term")
      ->check(CLI::IsMember(categories));
  gen->add_option("--shuffle-seed", cfg.shuffle_seed, "Shuffle the sample order with this seed");
  gen->add_flag("--csv", cfg.csv, "Also write dataset.csv");
  gen->add_option("-j,--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* val = app.add_subcommand("validate", "Re-check every dataset label with the oracle");
  add_semantics(val);
  val->add_option("--dataset", cfg.dataset, "Dataset JSON-lines file")->required();
  val->add_option("--report", cfg.report, "Write the validation report as JSON");

  auto* label = app.add_subcommand("label", "Classify one premise/hypothesis pair");
  add_semantics(label);
  label->add_option("--premise", cfg.premise)->required();
  label->add_option("--hypothesis", cfg.hypothesis)->required();

  auto* sim = app.add_subcommand("simulate", "Run the symmetry heuristic over a dataset");
  sim->add_option("--dataset", cfg.dataset, "Dataset JSON-lines file")->required();
  sim->add_option("--policy", cfg.policy, "conjunctive (default) or disjunctive")
      ->check(CLI::IsMember(policy_choices));
  sim->add_option("-o,--output", cfg.output, "Predictions file");
  sim->add_option("--summary", cfg.summary, "Summary JSON file");

  auto* ev = app.add_subcommand("evaluate", "Score a predictions file against a dataset");
  ev->add_option("--dataset", cfg.dataset, "Dataset JSON-lines file")->required();
  ev->add_option("--predictions", cfg.predictions, "Predictions JSON-lines file")->required();
  ev->add_option("--policy", cfg.policy, "Symmetry class definition")
      ->check(CLI::IsMember(policy_choices));
  ev->add_option("--format", cfg.formats, "json, csv and/or markdown (default markdown)")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
  ev->add_option("--out-prefix", cfg.out_prefix, "Write <prefix>.<ext> instead of stdout");
  ev->add_flag("--symmetry", cfg.symmetry, "Print the symmetry-class breakdown");

  for (auto* sub : {patterns, gen, val, label, sim, ev}) {
    if (sub != gen) {
      sub->add_option("-j,--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    }
  }

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "patterns") return cmd_patterns(cfg, out);
    if (cfg.subcommand == "generate") return cmd_generate(cfg, out);
    if (cfg.subcommand == "validate") return cmd_validate(cfg, out);
    if (cfg.subcommand == "label") return cmd_label(cfg, out);
    if (cfg.subcommand == "simulate") return cmd_simulate(cfg, out);
    if (cfg.subcommand == "evaluate") return cmd_evaluate(cfg, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DegeneratePattern& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sylloprobe
