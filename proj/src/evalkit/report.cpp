#include "symbcot/evalkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symbcot/corpus/problem.hpp"

namespace symbcot::evalkit {

using logic::Label;
using nlohmann::ordered_json;
using pipeline::RunRecord;

namespace {

// Shortest round-trip form, shared by the CSV and JSON renderings.
std::string number(double v) { return ordered_json(v).dump(); }

ordered_json confusion_json(const Confusion& c) {
  ordered_json labels = ordered_json::array();
  for (Label l : c.labels) labels.push_back(logic::to_string(l));
  return {{"labels", labels}, {"counts", c.counts}, {"undecided", c.undecided}};
}

Confusion confusion_from(const ordered_json& j) {
  logic::LabelSpace labels;
  for (const auto& s : j.at("labels")) {
    auto l = logic::parse_label(s.get<std::string>());
    if (!l) throw ReportError("unknown label " + s.dump());
    labels.push_back(*l);
  }
  Confusion c(labels);
  c.counts = j.at("counts").get<std::vector<std::vector<long>>>();
  c.undecided = j.at("undecided").get<std::vector<long>>();
  if (c.counts.size() != labels.size() || c.undecided.size() != labels.size())
    throw ReportError("confusion matrix does not match its labels");
  for (const auto& row : c.counts)
    if (row.size() != labels.size()) throw ReportError("confusion matrix is not square");
  return c;
}

ordered_json metrics_json(const LabelMetrics& m) {
  ordered_json per = ordered_json::array();
  for (const auto& p : m.per_label)
    per.push_back({{"label", logic::to_string(p.label)},
                   {"precision", p.precision},
                   {"recall", p.recall},
                   {"f1", p.f1},
                   {"precision_undefined", p.precision_undefined},
                   {"recall_undefined", p.recall_undefined},
                   {"support", p.support}});
  return {{"per_label", per},
          {"macro_precision", m.macro_precision},
          {"macro_recall", m.macro_recall},
          {"macro_f1", m.macro_f1}};
}

LabelMetrics metrics_from(const ordered_json& j) {
  LabelMetrics m;
  for (const auto& p : j.at("per_label")) {
    PerLabel l;
    auto label = logic::parse_label(p.at("label").get<std::string>());
    if (!label) throw ReportError("unknown label " + p.at("label").dump());
    l.label = *label;
    l.precision = p.at("precision").get<double>();
    l.recall = p.at("recall").get<double>();
    l.f1 = p.at("f1").get<double>();
    l.precision_undefined = p.at("precision_undefined").get<bool>();
    l.recall_undefined = p.at("recall_undefined").get<bool>();
    l.support = p.at("support").get<long>();
    m.per_label.push_back(l);
  }
  m.macro_precision = j.at("macro_precision").get<double>();
  m.macro_recall = j.at("macro_recall").get<double>();
  m.macro_f1 = j.at("macro_f1").get<double>();
  return m;
}

template <typename Map>
ordered_json map_json(const Map& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) {
    if constexpr (std::is_same_v<typename Map::key_type, int>)
      j[std::to_string(k)] = v;
    else
      j[k] = v;
  }
  return j;
}

// Labels ("True", ..., "G", "Undecided") in canonical order.
std::vector<std::string> ordered_keys(const std::map<std::string, double>& m) {
  std::vector<std::string> out;
  for (auto l : {Label::True, Label::False, Label::Unknown, Label::A, Label::B, Label::C, Label::D, Label::E, Label::F,
                 Label::G})
    if (m.count(logic::to_string(l))) out.push_back(logic::to_string(l));
  for (const auto& [k, v] : m)
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  return out;
}

std::string render_json(const EvalReport& r) {
  ordered_json datasets = ordered_json::array();
  for (const auto& d : r.datasets)
    datasets.push_back({{"dataset", d.dataset},
                        {"total", d.total},
                        {"correct", d.correct},
                        {"undecided", d.undecided},
                        {"executed", d.executed},
                        {"accuracy", d.accuracy},
                        {"execution_rate", d.execution_rate},
                        {"confusion", confusion_json(d.confusion)},
                        {"label_metrics", metrics_json(d.metrics)},
                        {"depth_breakdown", map_json(d.depth_breakdown)},
                        {"prediction_distribution", map_json(d.prediction_distribution)},
                        {"stage_output_lengths", map_json(d.stage_output_lengths)}});
  ordered_json j = {{"method", r.method}, {"datasets", datasets}};
  if (r.faithfulness)
    j["faithfulness"] = {{"faithful", r.faithfulness->faithful},
                         {"unfaithful", r.faithfulness->unfaithful},
                         {"false", r.faithfulness->false_},
                         {"even_split", r.faithfulness->even_split}};
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string render_csv(const EvalReport& r) {
  std::ostringstream out;
  out << "method,dataset,metric,key,value\n";
  auto row = [&](const std::string& dataset, const std::string& metric, const std::string& key, const std::string& v) {
    out << r.method << ',' << dataset << ',' << metric << ',' << key << ',' << v << '\n';
  };
  for (const auto& d : r.datasets) {
    row(d.dataset, "total", "", std::to_string(d.total));
    row(d.dataset, "correct", "", std::to_string(d.correct));
    row(d.dataset, "undecided", "", std::to_string(d.undecided));
    row(d.dataset, "executed", "", std::to_string(d.executed));
    row(d.dataset, "accuracy", "", number(d.accuracy));
    row(d.dataset, "execution_rate", "", number(d.execution_rate));
    for (std::size_t i = 0; i < d.confusion.labels.size(); ++i) {
      const auto gold = logic::to_string(d.confusion.labels[i]);
      for (std::size_t j = 0; j < d.confusion.labels.size(); ++j)
        row(d.dataset, "confusion", gold + "->" + logic::to_string(d.confusion.labels[j]),
            std::to_string(d.confusion.counts[i][j]));
      row(d.dataset, "confusion", gold + "->Undecided", std::to_string(d.confusion.undecided[i]));
    }
    for (const auto& p : d.metrics.per_label) {
      const auto l = logic::to_string(p.label);
      row(d.dataset, "precision", l, number(p.precision));
      row(d.dataset, "recall", l, number(p.recall));
      row(d.dataset, "f1", l, number(p.f1));
    }
    row(d.dataset, "macro_precision", "", number(d.metrics.macro_precision));
    row(d.dataset, "macro_recall", "", number(d.metrics.macro_recall));
    row(d.dataset, "macro_f1", "", number(d.metrics.macro_f1));
    for (const auto& [depth, acc] : d.depth_breakdown) row(d.dataset, "depth_accuracy", std::to_string(depth), number(acc));
    for (const auto& k : ordered_keys(d.prediction_distribution))
      row(d.dataset, "prediction_share", k, number(d.prediction_distribution.at(k)));
    for (const auto& [stage, mean] : d.stage_output_lengths) row(d.dataset, "mean_completion_tokens", stage, number(mean));
  }
  if (r.faithfulness) {
    row("", "faithfulness", "faithful", std::to_string(r.faithfulness->faithful));
    row("", "faithfulness", "unfaithful", std::to_string(r.faithfulness->unfaithful));
    row("", "faithfulness", "false", std::to_string(r.faithfulness->false_));
    row("", "faithfulness", "even_split", std::to_string(r.faithfulness->even_split.size()));
  }
  return out.str();
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string render_markdown(const EvalReport& r) {
  std::ostringstream out;
  out << "# Evaluation: " << r.method << "\n\n";
  out << "| Method |";
  for (const auto& d : r.datasets) out << ' ' << d.dataset << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < r.datasets.size(); ++i) out << "---|";
  out << "\n| " << r.method << " |";
  for (const auto& d : r.datasets) out << ' ' << percent(d.accuracy) << " |";
  out << "\n";
  for (const auto& d : r.datasets) {
    out << "\n## " << d.dataset << "\n\n";
    out << "- Problems: " << d.total << "\n";
    out << "- Accuracy: " << percent(d.accuracy) << " (" << d.correct << " correct, " << d.undecided
        << " undecided)\n";
    out << "- Execution rate: " << percent(d.execution_rate) << " (" << d.executed << " of " << d.total << ")\n";

    out << "\n### Confusion (rows gold, columns predicted)\n\n| Gold |";
    for (Label l : d.confusion.labels) out << ' ' << logic::to_string(l) << " |";
    out << " Undecided |\n|---|";
    for (std::size_t i = 0; i <= d.confusion.labels.size(); ++i) out << "---|";
    out << "\n";
    for (std::size_t i = 0; i < d.confusion.labels.size(); ++i) {
      out << "| " << logic::to_string(d.confusion.labels[i]) << " |";
      for (long c : d.confusion.counts[i]) out << ' ' << c << " |";
      out << ' ' << d.confusion.undecided[i] << " |\n";
    }

    out << "\n### Precision / recall / F1\n\n| Label | Precision | Recall | F1 | Support |\n|---|---|---|---|---|\n";
    for (const auto& p : d.metrics.per_label)
      out << "| " << logic::to_string(p.label) << " | " << percent(p.precision) << (p.precision_undefined ? "*" : "")
          << " | " << percent(p.recall) << (p.recall_undefined ? "*" : "") << " | " << percent(p.f1) << " | "
          << p.support << " |\n";
    out << "| Macro | " << percent(d.metrics.macro_precision) << " | " << percent(d.metrics.macro_recall) << " | "
        << percent(d.metrics.macro_f1) << " | " << d.total << " |\n";
    if (std::any_of(d.metrics.per_label.begin(), d.metrics.per_label.end(),
                    [](const PerLabel& p) { return p.precision_undefined || p.recall_undefined; }))
      out << "\n\\* zero denominator, reported as 0.\n";

    if (!d.depth_breakdown.empty()) {
      out << "\n### Accuracy by depth\n\n| Depth | Accuracy |\n|---|---|\n";
      for (const auto& [depth, acc] : d.depth_breakdown) out << "| " << depth << " | " << percent(acc) << " |\n";
    }
    if (!d.prediction_distribution.empty()) {
      out << "\n### Predictions\n\n| Label | Share |\n|---|---|\n";
      for (const auto& k : ordered_keys(d.prediction_distribution))
        out << "| " << k << " | " << percent(d.prediction_distribution.at(k)) << " |\n";
    }
    if (!d.stage_output_lengths.empty()) {
      out << "\n### Mean completion tokens\n\n| Stage | Tokens |\n|---|---|\n";
      for (const auto& [stage, mean] : d.stage_output_lengths) out << "| " << stage << " | " << fixed(mean, 1) << " |\n";
    }
  }
  if (r.faithfulness) {
    const auto& f = *r.faithfulness;
    out << "\n## Faithfulness\n\n| Faithful | Unfaithful | False | Even split |\n|---|---|---|---|\n";
    out << "| " << f.faithful << " | " << f.unfaithful << " | " << f.false_ << " | " << f.even_split.size() << " |\n";
  }
  if (!r.warnings.empty()) {
    out << "\n## Warnings\n\n";
    for (const auto& w : r.warnings) out << "- " << w << "\n";
  }
  return out.str();
}

}  // namespace

EvalReport evaluate(const std::vector<RunRecord>& records, const Golds& golds,
                    std::optional<FaithfulnessTally> faithfulness) {
  EvalReport report;
  std::set<std::string> methods;
  for (const auto& r : records) methods.insert(pipeline::to_string(r.method));
  report.method = methods.size() == 1 ? *methods.begin() : methods.empty() ? "none" : "mixed";
  if (records.empty()) report.warnings.push_back("no records to evaluate");

  // Validates ids up front so a mismatch is reported before any scoring.
  confusion_of(records, golds);

  std::map<std::string, std::vector<RunRecord>> by_dataset;
  for (const auto& r : records) by_dataset[corpus::to_string(r.dataset)].push_back(r);
  for (const auto& [name, rs] : by_dataset) {
    DatasetReport d;
    d.dataset = name;
    d.total = static_cast<long>(rs.size());
    for (const auto& r : rs) {
      if (r.label && *r.label == golds.at(r.id)) ++d.correct;
      if (!r.label) ++d.undecided;
      if (r.executed) ++d.executed;
      if (r.status == pipeline::RunStatus::Error)
        report.warnings.push_back(name + " record '" + r.id + "' failed: " + r.error);
    }
    d.accuracy = accuracy(rs, golds);
    d.execution_rate = execution_rate(rs);
    d.confusion = confusion_of(rs, golds);
    d.metrics = label_metrics(d.confusion);
    d.depth_breakdown = depth_breakdown(rs, golds);
    d.prediction_distribution = prediction_distribution(rs);
    d.stage_output_lengths = stage_output_lengths(rs);
    report.datasets.push_back(std::move(d));
  }
  report.faithfulness = std::move(faithfulness);
  if (report.faithfulness && !report.faithfulness->even_split.empty())
    report.warnings.push_back(std::to_string(report.faithfulness->even_split.size()) +
                              " problem(s) with evenly split faithfulness votes excluded");
  return report;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "markdown" || name == "md") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string percent(double fraction) {
  // Rounds on basis points so 0.825 (stored just below) still reads 82.50.
  const long long bp = std::llround(fraction * 10000.0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", bp < 0 ? "-" : "", std::llabs(bp) / 100, std::llabs(bp) % 100);
  return buf;
}

std::string render_report(const EvalReport& report, Format format) {
  switch (format) {
    case Format::Markdown: return render_markdown(report);
    case Format::Csv: return render_csv(report);
    case Format::Json: return render_json(report);
  }
  return {};
}

EvalReport report_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    EvalReport r;
    r.method = j.at("method").get<std::string>();
    for (const auto& d : j.at("datasets")) {
      DatasetReport ds;
      ds.dataset = d.at("dataset").get<std::string>();
      ds.total = d.at("total").get<long>();
      ds.correct = d.at("correct").get<long>();
      ds.undecided = d.at("undecided").get<long>();
      ds.executed = d.at("executed").get<long>();
      ds.accuracy = d.at("accuracy").get<double>();
      ds.execution_rate = d.at("execution_rate").get<double>();
      ds.confusion = confusion_from(d.at("confusion"));
      ds.metrics = metrics_from(d.at("label_metrics"));
      for (const auto& [k, v] : d.at("depth_breakdown").items()) ds.depth_breakdown[std::stoi(k)] = v.get<double>();
      ds.prediction_distribution = d.at("prediction_distribution").get<std::map<std::string, double>>();
      ds.stage_output_lengths = d.at("stage_output_lengths").get<std::map<std::string, double>>();
      r.datasets.push_back(std::move(ds));
    }
    if (j.contains("faithfulness")) {
      const auto& f = j["faithfulness"];
      FaithfulnessTally t;
      t.faithful = f.at("faithful").get<long>();
      t.unfaithful = f.at("unfaithful").get<long>();
      t.false_ = f.at("false").get<long>();
      t.even_split = f.at("even_split").get<std::vector<std::string>>();
      r.faithfulness = t;
    }
    r.warnings = j.value("warnings", std::vector<std::string>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  } catch (const std::logic_error& e) {  // std::stoi on a bad depth key
    throw ReportError(std::string("malformed report: ") + e.what());
  }
}

EvalReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReportError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return report_from_json(ss.str());
  } catch (const ReportError& e) {
    throw ReportError(path.string() + ": " + e.what());
  }
}

std::string render_comparison(const std::vector<EvalReport>& reports) {
  std::set<std::string> names;
  for (const auto& r : reports)
    for (const auto& d : r.datasets) names.insert(d.dataset);
  auto table = [&](const std::string& title, double DatasetReport::*field) {
    std::ostringstream out;
    out << "## " << title << "\n\n| Method |";
    for (const auto& n : names) out << ' ' << n << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < names.size(); ++i) out << "---|";
    out << "\n";
    for (const auto& r : reports) {
      out << "| " << r.method << " |";
      for (const auto& n : names) {
        auto it = std::find_if(r.datasets.begin(), r.datasets.end(), [&](const DatasetReport& d) { return d.dataset == n; });
        out << ' ' << (it == r.datasets.end() ? std::string("-") : percent((*it).*field)) << " |";
      }
      out << "\n";
    }
    return out.str();
  };
  return "# Comparison\n\n" + table("Accuracy", &DatasetReport::accuracy) + "\n" +
         table("Execution rate", &DatasetReport::execution_rate);
}

}  // namespace symbcot::evalkit
