#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sylloprobe/errors.hpp"
#include "sylloprobe/eval.hpp"

namespace sylloprobe {
namespace {

std::string fixed2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", round2(x));
  return buf;
}

std::string label_name(Label l) { return std::string(to_string(l)); }

nlohmann::ordered_json distribution_json(const LabelDistribution& d) {
  nlohmann::ordered_json j;
  j["total"] = d.total();
  nlohmann::ordered_json counts, percent;
  for (Label l : kAllLabels) {
    counts[label_name(l)] = d.counts[static_cast<int>(l)];
    percent[label_name(l)] = round2(d.percent(l));
  }
  j["counts"] = counts;
  j["percent"] = percent;
  return j;
}

LabelDistribution distribution_from_json(const nlohmann::json& j) {
  LabelDistribution d;
  for (Label l : kAllLabels) d.counts[static_cast<int>(l)] = j.at("counts").at(label_name(l)).get<std::size_t>();
  return d;
}

}  // namespace

double round2(double x) { return std::round(x * 100.0) / 100.0; }

ReportFormat report_format_from_string(std::string_view s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  throw std::invalid_argument("unknown report format \"" + std::string(s) +
                              "\" (expected json, csv or markdown)");
}

std::string_view extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Markdown: return "md";
  }
  return "txt";
}

nlohmann::ordered_json report_to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  j["dataset_rows"] = r.dataset_rows;
  j["covered"] = r.covered;
  j["coverage"] = round2(r.coverage());
  j["unmatched_predictions"] = r.unmatched_predictions;
  j["overall_accuracy"] = round2(r.overall_accuracy());
  j["chance_accuracy"] = round2(kChanceAccuracy);

  nlohmann::ordered_json per_label;
  for (Label l : kAllLabels) {
    auto acc = r.accuracy(l);
    per_label[label_name(l)] = acc ? nlohmann::ordered_json(round2(*acc)) : nlohmann::ordered_json(nullptr);
  }
  j["per_label_accuracy"] = per_label;

  nlohmann::ordered_json confusion;
  for (Label gold : kAllLabels) confusion[label_name(gold)] = distribution_json(r.confusion[static_cast<int>(gold)]);
  j["confusion"] = confusion;

  auto patterns = nlohmann::ordered_json::array();
  for (const auto& p : r.per_pattern) {
    patterns.push_back({{"pattern", p.pattern},
                        {"gold", label_name(p.gold)},
                        {"total", p.total},
                        {"correct", p.correct},
                        {"accuracy", round2(p.accuracy())}});
  }
  j["per_pattern"] = patterns;

  nlohmann::ordered_json sym;
  sym["policy"] = to_string(r.symmetry.policy);
  sym["symmetric"] = {{"predicted", distribution_json(r.symmetry.symmetric)},
                      {"gold", distribution_json(r.symmetry.symmetric_gold)}};
  sym["asymmetric"] = {{"predicted", distribution_json(r.symmetry.asymmetric)},
                       {"gold", distribution_json(r.symmetry.asymmetric_gold)}};
  j["symmetry"] = sym;
  return j;
}

EvalReport report_from_json(const nlohmann::json& j) {
  try {
    EvalReport r;
    r.source = j.at("source").get<std::string>();
    r.dataset_rows = j.at("dataset_rows").get<std::size_t>();
    r.covered = j.at("covered").get<std::size_t>();
    r.unmatched_predictions = j.at("unmatched_predictions").get<std::size_t>();
    for (Label gold : kAllLabels) {
      r.confusion[static_cast<int>(gold)] = distribution_from_json(j.at("confusion").at(label_name(gold)));
    }
    for (const auto& p : j.at("per_pattern")) {
      r.per_pattern.push_back(PatternAccuracy{p.at("pattern").get<std::string>(),
                                              label_from_string(p.at("gold").get<std::string>()),
                                              p.at("total").get<std::size_t>(),
                                              p.at("correct").get<std::size_t>()});
    }
    const auto& sym = j.at("symmetry");
    r.symmetry.policy = heuristic_policy_from_string(sym.at("policy").get<std::string>());
    r.symmetry.symmetric = distribution_from_json(sym.at("symmetric").at("predicted"));
    r.symmetry.symmetric_gold = distribution_from_json(sym.at("symmetric").at("gold"));
    r.symmetry.asymmetric = distribution_from_json(sym.at("asymmetric").at("predicted"));
    r.symmetry.asymmetric_gold = distribution_from_json(sym.at("asymmetric").at("gold"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string render_csv(const EvalReport& r) {
  std::string out = "gold,predicted,count,row_percent\r\n";
  for (Label gold : kAllLabels) {
    for (Label pred : kAllLabels) {
      out += label_name(gold) + "," + label_name(pred) + "," +
             std::to_string(r.confusion[static_cast<int>(gold)].counts[static_cast<int>(pred)]) + "," +
             fixed2(r.row_percent(gold, pred)) + "\r\n";
    }
  }
  return out;
}

void distribution_row(std::ostringstream& md, std::string_view name, const LabelDistribution& d) {
  md << "| " << name << " | " << d.total();
  for (Label l : kAllLabels) md << " | " << fixed2(d.percent(l));
  md << " |\n";
}

std::string render_markdown(const EvalReport& r) {
  std::ostringstream md;
  md << "# Evaluation report: " << r.source << "\n\n";
  md << "- Coverage: " << r.covered << " / " << r.dataset_rows << " (" << fixed2(r.coverage())
     << "%)\n";
  if (r.unmatched_predictions) {
    md << "- Predictions without a dataset row: " << r.unmatched_predictions << "\n";
  }
  md << "- Overall accuracy: " << fixed2(r.overall_accuracy()) << "\n\n";

  md << "## Accuracy per gold label\n\n";
  md << "| gold | samples | accuracy | chance |\n|---|---:|---:|---:|\n";
  for (Label l : kAllLabels) {
    auto acc = r.accuracy(l);
    md << "| " << to_string(l) << " | " << r.confusion[static_cast<int>(l)].total() << " | "
       << (acc ? fixed2(*acc) : std::string("n/a")) << " | " << fixed2(kChanceAccuracy) << " |\n";
  }

  md << "\n## Predicted-label percentages per gold label\n\n";
  md << "| gold | samples";
  for (Label l : kAllLabels) md << " | " << to_string(l);
  md << " |\n|---|---:|---:|---:|---:|\n";
  for (Label gold : kAllLabels) {
    distribution_row(md, to_string(gold), r.confusion[static_cast<int>(gold)]);
  }

  md << "\n## Predicted labels by symmetry class (" << to_string(r.symmetry.policy) << ")\n\n";
  md << "| class | samples";
  for (Label l : kAllLabels) md << " | " << to_string(l);
  md << " |\n|---|---:|---:|---:|---:|\n";
  distribution_row(md, "symmetric", r.symmetry.symmetric);
  distribution_row(md, "asymmetric", r.symmetry.asymmetric);

  md << "\n## Accuracy per pattern\n\n";
  md << "| pattern | gold | samples | accuracy |\n|---|---|---:|---:|\n";
  for (const auto& p : r.per_pattern) {
    md << "| " << p.pattern << " | " << to_string(p.gold) << " | " << p.total << " | "
       << fixed2(p.accuracy()) << " |\n";
  }
  return md.str();
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return report_to_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Markdown: return render_markdown(report);
  }
  return {};
}

}  // namespace sylloprobe
