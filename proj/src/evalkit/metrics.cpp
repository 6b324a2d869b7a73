#include "symbcot/evalkit/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace symbcot::evalkit {

using logic::Label;
using pipeline::RunRecord;

namespace {

const std::vector<Label> canonical_order = {Label::True, Label::False, Label::Unknown, Label::A, Label::B,
                                            Label::C,    Label::D,     Label::E,       Label::F, Label::G};

Label gold_for(const RunRecord& r, const Golds& golds) {
  auto it = golds.find(r.id);
  if (it == golds.end()) throw IdMismatch("no gold label for record '" + r.id + "'");
  return it->second;
}

void check_unique(const std::vector<RunRecord>& records) {
  std::set<std::string> seen;
  for (const auto& r : records)
    if (!seen.insert(r.id).second) throw IdMismatch("record '" + r.id + "' appears more than once");
}

double ratio(double num, double den, bool* undefined) {
  if (den == 0) {
    if (undefined) *undefined = true;
    return 0;
  }
  return num / den;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Golds golds_of(const std::vector<RunRecord>& records) {
  Golds g;
  for (const auto& r : records) g[r.id] = r.gold;
  return g;
}

double accuracy(const std::vector<RunRecord>& records, const Golds& golds) {
  check_unique(records);
  if (records.empty()) return 0;
  long correct = 0;
  for (const auto& r : records)
    if (r.label && *r.label == gold_for(r, golds)) ++correct;
  return static_cast<double>(correct) / static_cast<double>(records.size());
}

double execution_rate(const std::vector<RunRecord>& records, std::string* warning) {
  if (records.empty()) {
    if (warning) *warning = "execution rate of an empty record set is taken as 1.0";
    return 1.0;
  }
  const auto executed = std::count_if(records.begin(), records.end(), [](const RunRecord& r) { return r.executed; });
  return static_cast<double>(executed) / static_cast<double>(records.size());
}

Confusion::Confusion(logic::LabelSpace l)
    : labels(std::move(l)), counts(labels.size(), std::vector<long>(labels.size(), 0)), undecided(labels.size(), 0) {}

std::size_t Confusion::index_of(Label l) const {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw std::out_of_range("label " + logic::to_string(l) + " is not in the confusion matrix");
  return static_cast<std::size_t>(it - labels.begin());
}

long& Confusion::at(Label gold, Label predicted) { return counts[index_of(gold)][index_of(predicted)]; }
long Confusion::at(Label gold, Label predicted) const { return counts[index_of(gold)][index_of(predicted)]; }

long Confusion::total() const {
  long t = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (long c : counts[i]) t += c;
    t += undecided[i];
  }
  return t;
}

Confusion confusion_of(const std::vector<RunRecord>& records, const Golds& golds) {
  check_unique(records);
  std::set<Label> seen;
  for (const auto& r : records) {
    seen.insert(gold_for(r, golds));
    if (r.label) seen.insert(*r.label);
  }
  if (std::any_of(seen.begin(), seen.end(), logic::is_truth_value)) {
    seen.insert(Label::True);
    seen.insert(Label::False);
  }
  logic::LabelSpace labels;
  for (Label l : canonical_order)
    if (seen.count(l)) labels.push_back(l);
  Confusion c(labels);
  for (const auto& r : records) {
    const Label gold = gold_for(r, golds);
    if (r.label)
      ++c.at(gold, *r.label);
    else
      ++c.undecided[c.index_of(gold)];
  }
  return c;
}

LabelMetrics label_metrics(const Confusion& c) {
  LabelMetrics m;
  const std::size_t n = c.labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    PerLabel p;
    p.label = c.labels[i];
    const double tp = static_cast<double>(c.counts[i][i]);
    double predicted = 0, actual = static_cast<double>(c.undecided[i]);
    for (std::size_t j = 0; j < n; ++j) {
      predicted += static_cast<double>(c.counts[j][i]);
      actual += static_cast<double>(c.counts[i][j]);
    }
    p.support = static_cast<long>(actual);
    p.precision = ratio(tp, predicted, &p.precision_undefined);
    p.recall = ratio(tp, actual, &p.recall_undefined);
    p.f1 = p.precision + p.recall > 0 ? 2 * p.precision * p.recall / (p.precision + p.recall) : 0;
    m.per_label.push_back(p);
  }
  if (n > 0) {
    for (const auto& p : m.per_label) {
      m.macro_precision += p.precision;
      m.macro_recall += p.recall;
      m.macro_f1 += p.f1;
    }
    m.macro_precision /= static_cast<double>(n);
    m.macro_recall /= static_cast<double>(n);
    m.macro_f1 /= static_cast<double>(n);
  }
  return m;
}

std::map<int, double> depth_breakdown(const std::vector<RunRecord>& records, const Golds& golds) {
  std::map<int, std::pair<long, long>> tally;  // depth → (correct, total)
  for (const auto& r : records) {
    if (!r.depth) continue;
    auto& [correct, total] = tally[*r.depth];
    ++total;
    if (r.label && *r.label == gold_for(r, golds)) ++correct;
  }
  std::map<int, double> out;
  for (const auto& [depth, t] : tally) out[depth] = static_cast<double>(t.first) / static_cast<double>(t.second);
  return out;
}

std::map<std::string, double> prediction_distribution(const std::vector<RunRecord>& records) {
  std::map<std::string, double> out;
  if (records.empty()) return out;
  for (const auto& r : records) out[logic::to_string(r.label)] += 1;
  for (auto& [k, v] : out) v /= static_cast<double>(records.size());
  return out;
}

std::map<std::string, double> stage_output_lengths(const std::vector<RunRecord>& records) {
  std::map<std::string, std::pair<double, long>> sums;
  for (const auto& r : records)
    for (const auto& s : r.stages) {
      auto& [sum, count] = sums[pipeline::to_string(s.stage)];
      sum += static_cast<double>(s.completion_tokens);
      ++count;
    }
  std::map<std::string, double> out;
  for (const auto& [stage, s] : sums) out[stage] = s.first / static_cast<double>(s.second);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Faithful: return "faithful";
    case Verdict::Unfaithful: return "unfaithful";
    case Verdict::False: return "false";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  std::string low;
  for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto v : {Verdict::Faithful, Verdict::Unfaithful, Verdict::False})
    if (to_string(v) == low) return v;
  return std::nullopt;
}

std::vector<Annotation> parse_annotations(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::vector<Annotation> out;
  std::string line;
  std::size_t number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(trim(cell));
    if (!header) {
      if (cells != std::vector<std::string>{"problem_id", "annotator_id", "verdict"})
        throw AnnotationError("line " + std::to_string(number) + ": expected header problem_id,annotator_id,verdict");
      header = true;
      continue;
    }
    if (cells.size() != 3 || cells[0].empty() || cells[1].empty())
      throw AnnotationError("line " + std::to_string(number) + ": expected three fields");
    auto verdict = parse_verdict(cells[2]);
    if (!verdict) throw AnnotationError("line " + std::to_string(number) + ": unknown verdict '" + cells[2] + "'");
    out.push_back({cells[0], cells[1], *verdict});
  }
  if (!header) throw AnnotationError("missing header problem_id,annotator_id,verdict");
  return out;
}

FaithfulnessTally faithfulness_tally(const std::vector<Annotation>& annotations) {
  std::map<std::string, std::map<Verdict, long>> votes;
  for (const auto& a : annotations) ++votes[a.problem_id][a.verdict];
  FaithfulnessTally t;
  for (const auto& [id, counts] : votes) {
    long best = 0;
    std::vector<Verdict> top;
    for (const auto& [v, n] : counts) {
      if (n > best) {
        best = n;
        top = {v};
      } else if (n == best) {
        top.push_back(v);
      }
    }
    if (top.size() != 1) {
      t.even_split.push_back(id);
      continue;
    }
    switch (top.front()) {
      case Verdict::Faithful: ++t.faithful; break;
      case Verdict::Unfaithful: ++t.unfaithful; break;
      case Verdict::False: ++t.false_; break;
    }
  }
  return t;
}

}  // namespace symbcot::evalkit
