#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <nlohmann/json.hpp>

#include "sylloprobe/catalog.hpp"
#include "sylloprobe/dataset.hpp"
#include "sylloprobe/errors.hpp"
#include "sylloprobe/eval.hpp"
#include "sylloprobe/heuristic.hpp"
#include "sylloprobe/logic.hpp"
#include "sylloprobe/surface.hpp"

namespace py = pybind11;
namespace sp = sylloprobe;

namespace {

py::object to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::string classify_mood(int figure, const std::string& mood, const std::string& semantics) {
  const auto st = sp::statements_for(sp::figure_from_number(figure), sp::Mood::from_code(mood));
  return std::string(sp::to_string(sp::classify(st[0], st[1], st[2], sp::Semantics::from_name(semantics))));
}

std::string classify_bruteforce(int figure, const std::string& mood, const std::string& semantics,
                                int max_universe) {
  const auto st = sp::statements_for(sp::figure_from_number(figure), sp::Mood::from_code(mood));
  return std::string(sp::to_string(
      sp::classify_bruteforce(st[0], st[1], st[2], sp::Semantics::from_name(semantics), max_universe)));
}

std::string label_text(const std::string& premise, const std::string& hypothesis,
                       const std::string& semantics) {
  const auto parsed = sp::parse_sample(premise, hypothesis);
  return std::string(sp::to_string(sp::classify(parsed.statements[0], parsed.statements[1],
                                                parsed.statements[2], sp::Semantics::from_name(semantics))));
}

std::vector<std::pair<int, std::string>> valid_moods(const std::vector<int>& figures,
                                                     const std::string& semantics) {
  std::vector<sp::Figure> figs;
  for (int f : figures) figs.push_back(sp::figure_from_number(f));
  std::vector<std::pair<int, std::string>> out;
  for (const auto& fm : sp::list_valid_moods(figs, sp::Semantics::from_name(semantics))) {
    out.emplace_back(sp::figure_number(fm.figure), fm.mood.code());
  }
  return out;
}

py::object catalog(const std::string& semantics) {
  return to_py(sp::build_catalog(sp::Semantics::from_name(semantics)).to_json());
}

std::pair<std::string, std::string> realize(const std::string& pattern, const std::string& subject,
                                            const std::string& middle, const std::string& predicate,
                                            const std::string& semantics) {
  const auto cat = sp::build_catalog(sp::Semantics::from_name(semantics));
  const sp::PatternSchema* p = cat.find(pattern);
  if (!p) throw py::key_error("unknown pattern " + pattern);
  auto out = sp::realize_sample(*p, {subject, middle, predicate});
  return {out.premise, out.hypothesis};
}

py::dict parse(const std::string& premise, const std::string& hypothesis) {
  const auto parsed = sp::parse_sample(premise, hypothesis);
  py::dict d;
  d["figure"] = parsed.figure ? py::object(py::int_(sp::figure_number(*parsed.figure))) : py::object(py::none());
  d["mood"] = parsed.mood().code();
  d["subject"] = parsed.terms.subject;
  d["middle"] = parsed.terms.middle;
  d["predicate"] = parsed.terms.predicate;
  return d;
}

py::object generate(const std::filesystem::path& out_dir, std::size_t select,
                    std::optional<std::uint64_t> shuffle_seed, bool csv, unsigned jobs,
                    const std::string& semantics) {
  const auto cat = sp::build_catalog(sp::Semantics::from_name(semantics));
  const auto lex = sp::Lexicon::builtin();
  sp::GenerationConfig cfg;
  cfg.selection = {select, select, select};
  cfg.jobs = jobs;
  std::vector<sp::Sample> samples;
  {
    py::gil_scoped_release release;
    samples = sp::generate(cat, lex, cfg);
    if (shuffle_seed) sp::shuffle_samples(samples, *shuffle_seed);
  }
  nlohmann::ordered_json params = {{"select", select}, {"jobs", jobs}, {"csv", csv}};
  const auto manifest = sp::make_manifest(cat, lex, samples, shuffle_seed, params);
  {
    py::gil_scoped_release release;
    sp::write_dataset(samples, manifest, out_dir, csv, jobs);
  }
  return to_py(manifest.to_json());
}

py::object validate(const std::filesystem::path& dataset, const std::string& semantics) {
  return to_py(sp::validate_dataset(dataset, sp::Semantics::from_name(semantics)).to_json());
}

py::object simulate(const std::filesystem::path& dataset, const std::filesystem::path& predictions,
                    const std::string& policy) {
  return to_py(sp::simulate(dataset, predictions, sp::heuristic_policy_from_string(policy)).to_json());
}

py::object evaluate(const std::filesystem::path& dataset, const std::filesystem::path& predictions,
                    const std::string& policy) {
  return to_py(sp::report_to_json(
      sp::evaluate(dataset, predictions, sp::heuristic_policy_from_string(policy))));
}

std::string render(const std::filesystem::path& dataset, const std::filesystem::path& predictions,
                   const std::string& format, const std::string& policy) {
  return sp::render_report(sp::evaluate(dataset, predictions, sp::heuristic_policy_from_string(policy)),
                           sp::report_format_from_string(format));
}

py::dict features(const std::string& mood) {
  const auto f = sp::extract_features(sp::Mood::from_code(mood));
  py::dict d;
  d["premise_has_some"] = f.premise_has_some;
  d["premise_has_negation"] = f.premise_has_negation;
  d["hypothesis_has_some"] = f.hypothesis_has_some;
  d["hypothesis_has_negation"] = f.hypothesis_has_negation;
  d["symmetric_some"] = f.symmetric_some();
  d["symmetric_negation"] = f.symmetric_negation();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Categorical-syllogism NLI probe: oracle, dataset, heuristic and scoring";

  auto base = py::register_exception<sp::Error>(m, "SylloprobeError");
  py::register_exception<sp::IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<sp::UnparsableStatement>(m, "UnparsableStatement", base.ptr());
  py::register_exception<sp::DegeneratePattern>(m, "DegeneratePattern", base.ptr());
  auto schema = py::register_exception<sp::SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<sp::UnknownLabelString>(m, "UnknownLabelString", schema.ptr());
  py::register_exception<sp::DuplicatePredictionId>(m, "DuplicatePredictionId", schema.ptr());
  py::register_exception<sp::EmptyIntersection>(m, "EmptyIntersection", base.ptr());
  auto lexicon = py::register_exception<sp::LexiconError>(m, "LexiconError", base.ptr());
  py::register_exception<sp::LexiconTooSmall>(m, "LexiconTooSmall", lexicon.ptr());

  m.attr("CATALOG_VERSION") = std::string(sp::kCatalogVersion);
  m.attr("CHANCE_ACCURACY") = sp::kChanceAccuracy;

  m.def("classify_mood", &classify_mood, py::arg("figure"), py::arg("mood"),
        py::arg("semantics") = "import", "Label of (figure, mood) by the cell-mask oracle");
  m.def("classify_bruteforce", &classify_bruteforce, py::arg("figure"), py::arg("mood"),
        py::arg("semantics") = "import", py::arg("max_universe") = 8);
  m.def("label", &label_text, py::arg("premise"), py::arg("hypothesis"), py::arg("semantics") = "import",
        "Label of an English premise/hypothesis pair");
  m.def("list_valid_moods", &valid_moods, py::arg("figures") = std::vector<int>{1, 2, 3, 4},
        py::arg("semantics") = "import");
  m.def("catalog", &catalog, py::arg("semantics") = "import");
  m.def("realize", &realize, py::arg("pattern"), py::arg("subject"), py::arg("middle"),
        py::arg("predicate"), py::arg("semantics") = "import");
  m.def("parse", &parse, py::arg("premise"), py::arg("hypothesis"));
  m.def("features", &features, py::arg("mood"));
  m.def("generate", &generate, py::arg("out_dir"), py::arg("select") = 15,
        py::arg("shuffle_seed") = py::none(), py::arg("csv") = false, py::arg("jobs") = 1,
        py::arg("semantics") = "import", "Write dataset.jsonl and manifest.json; returns the manifest");
  m.def("validate", &validate, py::arg("dataset"), py::arg("semantics") = "import");
  m.def("simulate", &simulate, py::arg("dataset"), py::arg("predictions"),
        py::arg("policy") = "conjunctive");
  m.def("evaluate", &evaluate, py::arg("dataset"), py::arg("predictions"),
        py::arg("policy") = "conjunctive");
  m.def("render", &render, py::arg("dataset"), py::arg("predictions"), py::arg("format") = "markdown",
        py::arg("policy") = "conjunctive");
}
