#include "symbcot/corpus/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "symbcot/data/embedded.hpp"

namespace symbcot::corpus {

using nlohmann::json;

namespace {

std::string text_field(const json& rec, const std::string& id, const char* field) {
  if (!rec.contains(field) || rec[field].is_null()) throw MissingField(id, field);
  const auto& v = rec[field];
  if (v.is_string()) return v.get<std::string>();
  // Some releases store the context as a list of sentences.
  if (v.is_array()) {
    std::string out;
    for (const auto& s : v) {
      if (!s.is_string()) throw RecordError(id, std::string("field '") + field + "' is not text");
      if (!out.empty()) out += ' ';
      out += s.get<std::string>();
    }
    return out;
  }
  throw RecordError(id, std::string("field '") + field + "' is not text");
}

// "A) True" / "A. True" / "A: True" → {'A', "True"}.
std::optional<Option> split_option(const std::string& s) {
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G' || (s[1] != ')' && s[1] != '.' && s[1] != ':')) return std::nullopt;
  std::size_t start = 2;
  while (start < s.size() && s[start] == ' ') ++start;
  return Option{s[0], s.substr(start)};
}

std::vector<Option> options_of(const json& rec, const std::string& id) {
  std::vector<Option> out;
  if (!rec.contains("options") || rec["options"].is_null()) return out;
  for (const auto& o : rec["options"]) {
    if (o.is_object()) {
      out.push_back({o.at("letter").get<std::string>().at(0), o.at("text").get<std::string>()});
      continue;
    }
    if (!o.is_string()) throw RecordError(id, "option is not text");
    auto opt = split_option(o.get<std::string>());
    if (!opt) throw RecordError(id, "option without a letter: " + o.get<std::string>());
    out.push_back(*opt);
  }
  return out;
}

std::optional<int> depth_of(const json& rec, const std::string& id) {
  if (rec.contains("depth") && !rec["depth"].is_null()) {
    if (rec["depth"].is_number_integer()) return rec["depth"].get<int>();
    if (rec["depth"].is_string()) return std::stoi(rec["depth"].get<std::string>());
  }
  static const std::regex pattern("-D(\\d+)");
  std::smatch m;
  if (std::regex_search(id, m, pattern)) return std::stoi(m[1]);
  return std::nullopt;
}

Problem parse_record(Dataset dataset, const json& rec, std::size_t index) {
  if (!rec.is_object()) throw RecordError("#" + std::to_string(index), "record is not an object");
  if (!rec.contains("id")) throw MissingField("#" + std::to_string(index), "id");
  const std::string id = rec["id"].is_string() ? rec["id"].get<std::string>() : rec["id"].dump();
  Problem p;
  p.id = id;
  p.dataset = dataset;
  if (rec.contains("dataset") && rec["dataset"].is_string()) {
    auto d = parse_dataset(rec["dataset"].get<std::string>());
    if (!d) throw RecordError(id, "unknown dataset '" + rec["dataset"].get<std::string>() + "'");
    p.dataset = *d;
  }
  p.context = text_field(rec, id, "context");
  p.question = text_field(rec, id, "question");
  auto options = options_of(rec, id);

  std::string raw_gold;
  if (rec.contains("gold") && rec["gold"].is_string()) raw_gold = rec["gold"].get<std::string>();
  else if (rec.contains("answer") && rec["answer"].is_string()) raw_gold = rec["answer"].get<std::string>();
  else if (rec.contains("label") && rec["label"].is_string()) raw_gold = rec["label"].get<std::string>();
  else throw MissingField(id, "gold");

  std::optional<logic::Label> gold = logic::parse_label(raw_gold);
  // "F" is an option letter in multiple choice, not False.
  if (family_of(p.dataset) == Family::CSP && raw_gold.size() == 1)
    gold = logic::option_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(raw_gold[0]))));
  if (family_of(p.dataset) == Family::FOL) {
    // Logic-LM stores FOL answers as the letter of a True/False/Unknown option.
    if (gold && !logic::is_truth_value(*gold)) {
      gold.reset();
      for (const auto& o : options)
        if (o.letter == raw_gold[0]) gold = logic::parse_label(o.text);
    }
    options.clear();
  }
  p.options = std::move(options);
  const auto space = label_space(p);
  if (!gold || std::find(space.begin(), space.end(), *gold) == space.end()) throw UnknownLabel(id, raw_gold);
  p.gold = *gold;
  if (p.dataset == Dataset::ProofWriter) p.depth = depth_of(rec, id);
  if (rec.contains("translation") && rec["translation"].is_string()) p.translation = rec["translation"].get<std::string>();
  return p;
}

}  // namespace

LoadResult load_text(Dataset dataset, std::string_view text) {
  std::vector<json> records;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  try {
    if (text[first] == '[') {
      for (auto& r : json::parse(text)) records.push_back(std::move(r));
    } else {
      std::istringstream in{std::string(text)};
      std::string line;
      while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) records.push_back(json::parse(line));
    }
  } catch (const json::exception& e) {
    throw CorpusError(std::string("malformed JSON: ") + e.what());
  }
  LoadResult out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      out.problems.push_back(parse_record(dataset, records[i], i));
    } catch (const MissingField& e) {
      out.errors.push_back(std::make_shared<MissingField>(e));
    } catch (const UnknownLabel& e) {
      out.errors.push_back(std::make_shared<UnknownLabel>(e));
    } catch (const RecordError& e) {
      out.errors.push_back(std::make_shared<RecordError>(e));
    } catch (const json::exception& e) {
      out.errors.push_back(std::make_shared<RecordError>("#" + std::to_string(i), e.what()));
    } catch (const std::exception& e) {
      out.errors.push_back(std::make_shared<RecordError>("#" + std::to_string(i), e.what()));
    }
  }
  if (records.size() != expected_size(dataset)) {
    out.warnings.push_back(to_string(dataset) + ": " + std::to_string(records.size()) + " records, expected " +
                           std::to_string(expected_size(dataset)));
  }
  return out;
}

LoadResult load(Dataset dataset, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_text(dataset, ss.str());
}

std::string to_json_line(const Problem& p) {
  json options = json::array();
  for (const auto& o : p.options) options.push_back(std::string(1, o.letter) + ") " + o.text);
  json j = {{"id", p.id},
            {"dataset", to_string(p.dataset)},
            {"context", p.context},
            {"question", p.question},
            {"options", options},
            {"gold", logic::to_string(p.gold)},
            {"depth", p.depth ? json(*p.depth) : json(nullptr)}};
  if (!p.translation.empty()) j["translation"] = p.translation;
  return j.dump();
}

std::string to_jsonl(const std::vector<Problem>& problems) {
  std::string out;
  for (const auto& p : problems) out += to_json_line(p) + "\n";
  return out;
}

const std::vector<Problem>& mini_corpus() {
  static const std::vector<Problem> problems = [] {
    auto text = data::embedded_file("minicorpus.json");
    if (!text) throw CorpusError("mini-corpus data is not embedded");
    auto result = load_text(Dataset::ProntoQA, *text);
    if (!result.errors.empty()) throw CorpusError("embedded mini-corpus: " + std::string(result.errors[0]->what()));
    return result.problems;
  }();
  return problems;
}

}  // namespace symbcot::corpus
