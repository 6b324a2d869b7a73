#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "support/temp_dir.hpp"
#include "symbcot/corpus/corpus.hpp"
#include "symbcot/csp/parse.hpp"
#include "symbcot/csp/solver.hpp"
#include "symbcot/inference/fol_decider.hpp"
#include "symbcot/inference/forward_chain.hpp"
#include "symbcot/syntax/translation.hpp"

using namespace symbcot;
using corpus::Dataset;
using logic::Label;

namespace {

const corpus::Problem& item(const std::string& id) {
  for (const auto& p : corpus::mini_corpus())
    if (p.id == id) return p;
  FAIL("no mini-corpus item " << id);
  throw std::logic_error("unreachable");
}

// Enumerates every assignment and applies the question's reading of the
// options directly, without the solver's search.
logic::Prediction brute_force_answer(const csp::CspModel& model, const std::string& question) {
  std::vector<int> values(model.variables.size());
  std::vector<std::size_t> index(model.variables.size(), 0);
  std::map<char, std::pair<std::size_t, std::size_t>> holds;  // letter → (satisfied, solutions)
  for (;;) {
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = model.variables[i].domain[index[i]];
    bool ok = std::all_of(model.constraints.begin(), model.constraints.end(),
                          [&](const auto& c) { return csp::evaluate(c.expr, model, values); });
    if (ok)
      for (const auto& q : model.queries) {
        holds[q.letter].second++;
        if (csp::evaluate(q.expr, model, values)) holds[q.letter].first++;
      }
    std::size_t i = 0;
    while (i < index.size() && ++index[i] == model.variables[i].domain.size()) index[i++] = 0;
    if (i == index.size()) break;
  }
  const bool cannot = question.find("CANNOT") != std::string::npos;
  std::vector<char> picks;
  for (const auto& q : model.queries) {
    auto [sat, total] = holds[q.letter];
    if (total == 0) return std::nullopt;
    if (cannot ? sat == 0 : sat == total) picks.push_back(q.letter);
  }
  if (picks.size() != 1) return std::nullopt;
  return logic::option_letter(picks[0]);
}

}  // namespace

TEST_CASE("mini-corpus covers every dataset") {
  const auto& items = corpus::mini_corpus();
  CHECK(items.size() == 12);
  std::set<Dataset> seen;
  for (const auto& p : items) seen.insert(p.dataset);
  CHECK(seen.size() == corpus::all_datasets().size());
  std::set<std::string> ids;
  for (const auto& p : items) CHECK(ids.insert(p.id).second);
  CHECK(item("lockers").gold == Label::A);
  CHECK(item("tours").gold == Label::C);
  CHECK(item("hawk").gold == Label::False);
  CHECK(item("max").gold == Label::False);
}

TEST_CASE("FOL translations parse and entail the gold label") {
  for (const auto& p : corpus::mini_corpus()) {
    if (p.family() != corpus::Family::FOL) continue;
    CAPTURE(p.id);
    auto parsed = syntax::parse_translation_block(p.translation);
    REQUIRE(parsed.value);
    REQUIRE(parsed.value->executable);
    const auto& block = *parsed.value;
    Label verdict;
    if (block.kb && block.query) {
      verdict = inference::decide(*block.kb, *block.query);
    } else {
      std::vector<logic::Formula> premises;
      for (const auto& g : block.premises) premises.push_back(g.formula);
      verdict = inference::decide_formula(premises, block.statement->formula);
    }
    CHECK(verdict == p.gold);
  }
}

TEST_CASE("ProofWriter depths match the shortest derivation") {
  for (const auto& p : corpus::mini_corpus()) {
    if (p.dataset != Dataset::ProofWriter || !p.depth) continue;
    CAPTURE(p.id);
    auto block = *syntax::parse_translation_block(p.translation).value;
    auto chain = inference::forward_chain(*block.kb);
    auto q = *block.query;
    // A negated query is proved by deriving its complement.
    if (p.gold == Label::False) q = q.negated();
    const auto* d = chain.find(q);
    REQUIRE(d);
    CHECK(static_cast<int>(d->depth) == *p.depth);
  }
  CHECK(item("tiger").depth == 4);
  CHECK_FALSE(item("anne").depth);
}

TEST_CASE("CSP translations agree with exhaustive enumeration and gold") {
  for (const auto& p : corpus::mini_corpus()) {
    if (p.family() != corpus::Family::CSP) continue;
    CAPTURE(p.id);
    auto parsed = csp::parse_csp_block(p.translation);
    REQUIRE(parsed.value);
    const auto& model = *parsed.value;
    CHECK(model.queries.size() == p.options.size());
    auto oracle = brute_force_answer(model, p.question);
    CHECK(oracle == p.gold);
    auto verdict = csp::evaluate_queries(model);
    auto selection = csp::select_answer(verdict, csp::detect_question_mode(p.question));
    CHECK(selection.answer == oracle);
  }
}

TEST_CASE("Logic-LM records map answer letters through the option text") {
  const char* text = R"([
    {"id": "FOLIO_dev_1", "context": ["All cats purr.", "Tom is a cat."], "question": "Tom purrs?",
     "options": ["A) True", "B) False", "C) Uncertain"], "answer": "C"},
    {"id": "ProntoQA_7", "context": "Max is a yumpus.", "question": "Max is sour?",
     "options": ["A) True", "B) False"], "answer": "B"}
  ])";
  auto folio = corpus::load_text(Dataset::FOLIO, R"([{"id": "FOLIO_dev_1", "context": ["All cats purr.", "Tom is a cat."],
    "question": "Tom purrs?", "options": ["A) True", "B) False", "C) Uncertain"], "answer": "C"}])");
  REQUIRE(folio.problems.size() == 1);
  CHECK(folio.problems[0].gold == Label::Unknown);
  CHECK(folio.problems[0].options.empty());
  CHECK(folio.problems[0].context == "All cats purr. Tom is a cat.");

  auto pronto = corpus::load_text(Dataset::ProntoQA, text);
  // The first record is still read as ProntoQA, where Unknown is not a label.
  REQUIRE(pronto.problems.size() == 1);
  CHECK(pronto.problems[0].gold == Label::False);
  REQUIRE(pronto.errors.size() == 1);
  CHECK(dynamic_cast<const corpus::UnknownLabel*>(pronto.errors[0].get()));
}

TEST_CASE("multiple-choice gold letters are never read as truth values") {
  auto r = corpus::load_text(Dataset::LogicalDeduction, R"([{"id": "ld7", "context": "c", "question": "q",
    "options": ["A) a", "B) b", "C) c", "D) d", "E) e", "F) f", "G) g"], "answer": "F"}])");
  REQUIRE(r.problems.size() == 1);
  CHECK(r.problems[0].gold == Label::F);
  auto bad = corpus::load_text(Dataset::LogicalDeduction, R"([{"id": "ld3", "context": "c", "question": "q",
    "options": ["A) a", "B) b", "C) c"], "answer": "E"}])");
  CHECK(bad.problems.empty());
  REQUIRE(bad.errors.size() == 1);
  CHECK(dynamic_cast<const corpus::UnknownLabel*>(bad.errors[0].get()));
}

TEST_CASE("a record without gold is reported and the rest still load") {
  auto r = corpus::load_text(Dataset::ProofWriter,
                             "{\"id\": \"pw-D3-1\", \"context\": \"c\", \"question\": \"q\", \"answer\": \"A\","
                             " \"options\": [\"A) True\", \"B) False\", \"C) Unknown\"]}\n"
                             "{\"id\": \"pw-D2-2\", \"context\": \"c\", \"question\": \"q\"}\n");
  REQUIRE(r.problems.size() == 1);
  CHECK(r.problems[0].gold == Label::True);
  CHECK(r.problems[0].depth == 3);
  REQUIRE(r.errors.size() == 1);
  const auto* missing = dynamic_cast<const corpus::MissingField*>(r.errors[0].get());
  REQUIRE(missing);
  CHECK(missing->record_id == "pw-D2-2");
}

TEST_CASE("unexpected split sizes are warnings") {
  auto r = corpus::load_text(Dataset::FOLIO, R"([{"id": "x", "context": "c", "question": "q", "gold": "True"}])");
  CHECK(r.errors.empty());
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("expected 204") != std::string::npos);
  CHECK_THROWS_AS(corpus::load_text(Dataset::FOLIO, "[{"), corpus::CorpusError);
  CHECK_THROWS_AS(corpus::load(Dataset::FOLIO, "/nonexistent/file.json"), corpus::CorpusError);
}

TEST_CASE("serialization round-trips through the loader") {
  const auto& items = corpus::mini_corpus();
  auto once = corpus::load_text(Dataset::ProntoQA, corpus::to_jsonl(items));
  CHECK(once.errors.empty());
  CHECK(once.problems == items);
  auto twice = corpus::load_text(Dataset::ProntoQA, corpus::to_jsonl(once.problems));
  CHECK(twice.problems == once.problems);

  testing::TempDir dir;
  auto path = dir.path() / "corpus.jsonl";
  std::ofstream(path) << corpus::to_jsonl(items);
  CHECK(corpus::load(Dataset::ProntoQA, path).problems == items);
}

TEST_CASE("dataset names and label spaces") {
  CHECK(corpus::parse_dataset("ar_lsat") == Dataset::ARLSAT);
  CHECK(corpus::parse_dataset("LogicalDeduction") == Dataset::LogicalDeduction);
  CHECK_FALSE(corpus::parse_dataset("gsm8k"));
  CHECK(corpus::label_space(Dataset::ProntoQA, 0) == logic::true_false_space());
  CHECK(corpus::label_space(Dataset::FOLIO, 0) == logic::true_false_unknown_space());
  CHECK(corpus::label_space(Dataset::ARLSAT, 5) == logic::option_space(5));
  CHECK(corpus::surface_label(Dataset::FOLIO, Label::Unknown) == "Uncertain");
  CHECK(corpus::surface_label(Dataset::ProofWriter, Label::Unknown) == "Unknown");
}
