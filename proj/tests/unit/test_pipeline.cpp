#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/fixtures.hpp"
#include "support/temp_dir.hpp"
#include "symbcot/corpus/corpus.hpp"
#include "symbcot/csp/parse.hpp"
#include "symbcot/csp/solver.hpp"
#include "symbcot/inference/fol_decider.hpp"
#include "symbcot/inference/forward_chain.hpp"
#include "symbcot/pipeline/runner.hpp"
#include "symbcot/syntax/translation.hpp"

using namespace symbcot;
using namespace symbcot::pipeline;
using corpus::Dataset;
using logic::Label;

namespace {

const corpus::Problem& item(const std::string& id) {
  for (const auto& p : corpus::mini_corpus())
    if (p.id == id) return p;
  FAIL("no mini-corpus item " << id);
  throw std::logic_error("unreachable");
}

const std::vector<Stage> all_stages = {Stage::Translator, Stage::Planner, Stage::Solver,
                                       Stage::Verifier,   Stage::Naive,   Stage::CoT};

std::shared_ptr<llm::ScriptedBackend> transcripts() {
  return llm::ScriptedBackend::from_transcripts(testing::fixture_path("transcripts/minicorpus.json"));
}

llm::Gateway scripted(std::shared_ptr<llm::Backend> backend) {
  return llm::Gateway(llm::Mode::Scripted, std::move(backend), nullptr);
}

const logic::LabelSpace truth3 = {Label::True, Label::False, Label::Unknown};
const logic::LabelSpace letters5 = {Label::A, Label::B, Label::C, Label::D, Label::E};

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

// The engine's answer on a translation, computed directly from the
// symbolic libraries.
logic::Prediction engine_answer(Dataset d, const std::string& translation, const std::string& question_text) {
  if (corpus::family_of(d) == corpus::Family::FOL) {
    auto parsed = syntax::parse_translation_block(translation);
    REQUIRE(parsed.value);
    REQUIRE(parsed.value->executable);
    const auto& b = *parsed.value;
    if (b.kb && b.query) return inference::decide(*b.kb, *b.query);
    std::vector<logic::Formula> premises;
    for (const auto& g : b.premises) premises.push_back(g.formula);
    return inference::decide_formula(premises, b.statement->formula);
  }
  auto parsed = csp::parse_csp_block(translation);
  REQUIRE(parsed.value);
  for (const auto& diag : parsed.diagnostics) REQUIRE_FALSE(diag.is_error());
  const auto verdict = csp::evaluate_queries(*parsed.value);
  return csp::select_answer(verdict, csp::detect_question_mode(question_text)).answer;
}

// The question line of a rendered translator prompt.
std::string question_of(const std::string& rendered) {
  const auto at = rendered.find("Question:");
  REQUIRE(at != std::string::npos);
  const auto start = rendered.find('\n', at) + 1;
  return rendered.substr(start, rendered.find('\n', start) - start);
}

std::string without_wall_time(std::vector<RunRecord> records) {
  for (auto& r : records) r.wall_time = 0;
  return to_jsonl(records);
}

}  // namespace

TEST_CASE("every embedded template loads with its required placeholders and two demos") {
  for (Dataset d : corpus::all_datasets())
    for (Stage s : all_stages) {
      CAPTURE(corpus::to_string(d));
      CAPTURE(to_string(s));
      const auto t = load_template(s, d);
      CHECK(t.stage == s);
      CHECK(t.dataset == d);
      const auto present = t.placeholders();
      for (const auto& name : required_placeholders(s))
        CHECK(std::find(present.begin(), present.end(), name) != present.end());
      CHECK(t.demos.size() == 2);
      for (const auto& demo : t.demos) {
        CHECK_FALSE(demo.input.empty());
        CHECK_FALSE(demo.output.empty());
      }
    }
}

TEST_CASE("template parsing and rendering errors") {
  SUBCASE("missing required placeholder") {
    CHECK_THROWS_AS(parse_template(Stage::Solver, Dataset::FOLIO, "=== template ===\n{premises_sym}\n{plan}\n"),
                    TemplateError);
  }
  SUBCASE("no template section") {
    CHECK_THROWS_AS(parse_template(Stage::Planner, Dataset::FOLIO, "{premises_sym}\n"), TemplateError);
  }
  SUBCASE("demo input without output") {
    CHECK_THROWS_AS(parse_template(Stage::Planner, Dataset::FOLIO,
                                   "=== template ===\n{premises_sym}\n=== demo input ===\nx\n"),
                    TemplateError);
  }
  SUBCASE("unbound placeholder") {
    CHECK_THROWS_AS(render("Premises: {premises_sym}", {}), TemplateError);
  }
  SUBCASE("unknown braces are left alone") {
    CHECK(render("{plan} in the format {true/false}", {{"plan", "P"}}) == "P in the format {true/false}");
  }
  SUBCASE("missing template directory") {
    testing::TempDir dir;
    CHECK_THROWS_AS(load_template(Stage::Solver, Dataset::FOLIO, dir.path()), TemplateError);
  }
}

TEST_CASE("messages carry the demos before the prompt") {
  const auto t = load_template(Stage::Planner, Dataset::FOLIO);
  const Bindings b = {{"context", "ctx"}, {"premises_sym", "PREMISES"}};
  const auto two = build_messages(t, b, 2);
  REQUIRE(two.size() == 5);
  CHECK(two[0].role == "user");
  CHECK(two[0].content == t.demos[0].input);
  CHECK(two[1].role == "assistant");
  CHECK(two[1].content == t.demos[0].output);
  CHECK(two[4].role == "user");
  CHECK(two[4].content.find("PREMISES") != std::string::npos);
  CHECK(build_messages(t, b, 0).size() == 1);
  CHECK(build_messages(t, b, 10).size() == 5);
  CHECK(flatten(build_messages(t, b, 0)).rfind("[user]\n", 0) == 0);
}

TEST_CASE("demo solutions agree with the engines on the demo translations") {
  for (Dataset d : corpus::all_datasets()) {
    CAPTURE(corpus::to_string(d));
    const auto translator = load_template(Stage::Translator, d);
    const auto solver = load_template(Stage::Solver, d);
    REQUIRE(translator.demos.size() == solver.demos.size());
    for (std::size_t i = 0; i < translator.demos.size(); ++i) {
      CAPTURE(i);
      const std::string question = question_of(translator.demos[i].input);
      const auto expected = engine_answer(d, translator.demos[i].output, question);
      REQUIRE(expected);
      // The solver demo is the continuation of the same problem.
      CHECK(solver.demos[i].input.find(translator.demos[i].output.substr(0, 40)) != std::string::npos);
      const auto space = corpus::family_of(d) == corpus::Family::FOL ? truth3 : letters5;
      CHECK(extract_label(solver.demos[i].output, space) == expected);
      const auto verifier = load_template(Stage::Verifier, d);
      CHECK(extract_label(verifier.demos[i].output, space) == expected);
    }
  }
}

TEST_CASE("extract_label") {
  SUBCASE("truth phrase") {
    CHECK(extract_label("Thus, after checking each step, the answer is verified to be false.", truth3) ==
          Label::False);
  }
  SUBCASE("correct option phrase") {
    CHECK(extract_label("The minivan is newest.\nThe correct option is: B)", letters5) == Label::B);
  }
  SUBCASE("no conclusion") { CHECK_FALSE(extract_label("no conclusion here", truth3)); }
  SUBCASE("braced label") { CHECK(extract_label("Step 3 ...\nFinal answer: {false}", truth3) == Label::False); }
  SUBCASE("uncertain reads as Unknown") {
    CHECK(extract_label("Final answer: {uncertain}", truth3) == Label::Unknown);
    CHECK(extract_label("The statement is uncertain.", truth3) == Label::Unknown);
  }
  SUBCASE("the last label wins") {
    CHECK(extract_label("At first the answer is true. On reflection the answer is false.", truth3) == Label::False);
    CHECK(extract_label("Final answer: {true}\nRevised: {false}", truth3) == Label::False);
  }
  SUBCASE("lowercase letters are not option letters") {
    CHECK_FALSE(extract_label("Therefore, the answer is a good guess.", letters5));
  }
  SUBCASE("labels outside the space are ignored") {
    CHECK_FALSE(extract_label("Final answer: {unknown}", {Label::True, Label::False}));
    CHECK_FALSE(extract_label("The correct option is: F)", letters5));
  }
  SUBCASE("emphasis is stripped") {
    CHECK(extract_label("**The correct option is: C)**", letters5) == Label::C);
    CHECK(extract_label("\\textbf{Final answer: D}", letters5) == Label::D);
  }
  SUBCASE("letter aliases for true/false options") {
    const LetterAliases aliases = {{'A', Label::True}, {'B', Label::False}, {'C', Label::Unknown}};
    CHECK(extract_label("The correct option is: C)", truth3, aliases) == Label::Unknown);
  }
  SUBCASE("option letter on a concluding line") {
    CHECK(extract_label("Option D fails.\nHence E must hold.", letters5) == Label::E);
  }
}

TEST_CASE("lockers through SymbCoT with the four worked responses") {
  const auto& p = item("lockers");
  auto backend = std::make_shared<llm::ScriptedBackend>();
  for (const char* stage : {"translator", "planner", "solver", "verifier"})
    backend->add(std::string("lockers/") + stage, testing::read_fixture(std::string("lockers/") + stage + ".txt"));
  auto gateway = scripted(backend);
  const auto r = run_problem(p, Method::SymbCoT, RunConfig{}, gateway);
  CHECK(r.status == RunStatus::Ok);
  REQUIRE(r.stages.size() == 4);
  CHECK(r.stages[0].stage == Stage::Translator);
  CHECK(r.stages[0].artifact == ArtifactKind::Translation);
  CHECK_FALSE(r.stages[0].parsed);  // typeset prose, not a CSP block
  CHECK(r.stages[1].artifact == ArtifactKind::Plan);
  CHECK(r.stages[2].label == Label::A);
  CHECK(r.stages[3].label == Label::A);
  CHECK(r.label == Label::A);
  CHECK(r.executed);
  CHECK(gateway.backend_calls() == 4);
  // Later stages see the earlier responses.
  CHECK(r.stages[2].prompt.find("Fred\\_locker") != std::string::npos);
  CHECK(r.stages[3].prompt.find("the final answer is A") != std::string::npos);
}

TEST_CASE("TranslateThenSolve on the antique car") {
  const auto& p = item("car");
  SUBCASE("well-formed translation") {
    auto gateway = scripted(transcripts());
    const auto r = run_problem(p, Method::TranslateThenSolve, RunConfig{}, gateway);
    REQUIRE(r.stages.size() == 1);
    CHECK(r.stages[0].parsed);
    CHECK(r.executed);
    CHECK(r.label == Label::B);
    CHECK(r.engine_result.find("B=") != std::string::npos);
    CHECK_FALSE(r.fallback_used);
  }
  SUBCASE("corrupted constraint line") {
    auto backend = std::make_shared<llm::ScriptedBackend>();
    backend->add("car/translator", replace_once(p.translation, "minivan > convertible", "minivan >> convertible"));
    backend->add("car/cot", "The correct option is: B)");
    auto gateway = scripted(backend);
    RunConfig config;
    const auto abstain = run_problem(p, Method::TranslateThenSolve, config, gateway);
    CHECK_FALSE(abstain.stages[0].parsed);
    CHECK_FALSE(abstain.stages[0].diagnostics.empty());
    CHECK_FALSE(abstain.executed);
    CHECK(abstain.fallback_used == FallbackPolicy::Abstain);
    CHECK_FALSE(abstain.label);
    CHECK(abstain.status == RunStatus::Ok);

    config.fallback = FallbackPolicy::Random;
    config.seed = 7;
    const auto random1 = run_problem(p, Method::TranslateThenSolve, config, gateway);
    const auto random2 = run_problem(p, Method::TranslateThenSolve, config, gateway);
    REQUIRE(random1.label);
    CHECK(random1.label == random2.label);
    CHECK(random1.fallback_used == FallbackPolicy::Random);
    const auto space = corpus::label_space(p);
    CHECK(std::find(space.begin(), space.end(), *random1.label) != space.end());

    config.fallback = FallbackPolicy::CotBackup;
    const auto backup = run_problem(p, Method::TranslateThenSolve, config, gateway);
    REQUIRE(backup.stages.size() == 2);
    CHECK(backup.stages[1].stage == Stage::CoT);
    CHECK(backup.label == Label::B);
    CHECK_FALSE(backup.executed);
  }
}

TEST_CASE("random fallback spreads over the label space across seeds") {
  auto backend = std::make_shared<llm::ScriptedBackend>();
  backend->add("car/translator", "not a model");
  auto gateway = scripted(backend);
  RunConfig config;
  config.fallback = FallbackPolicy::Random;
  std::set<Label> seen;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    config.seed = seed;
    seen.insert(*run_problem(item("car"), Method::TranslateThenSolve, config, gateway).label);
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("translator stage on the Simpsons context") {
  const auto& p = item("ben");
  auto gateway = scripted(transcripts());
  const auto t = load_template(Stage::Translator, p.dataset);
  const auto rec = run_stage(t, {{"context", p.context}, {"question", p.question}}, p, RunConfig{}, gateway);
  CHECK(rec.parsed);
  CHECK(rec.diagnostics.empty());
  CHECK(rec.canonical.find("∀x (Yellow(x) → Simpsons(x))") != std::string::npos);
  CHECK(rec.prompt.find(p.context) != std::string::npos);
  CHECK(rec.backend == "scripted");
}

TEST_CASE("solver stage extraction") {
  const auto& p = item("hawk");
  auto backend = std::make_shared<llm::ScriptedBackend>();
  backend->add("hawk/solver", "Step 1 ...\nFinal answer: {false}");
  auto gateway = scripted(backend);
  const auto t = load_template(Stage::Solver, p.dataset);
  const auto rec = run_stage(t, {{"premises_sym", "P"}, {"plan", "Q"}, {"question", p.question}, {"options", ""}}, p,
                             RunConfig{}, gateway);
  CHECK(rec.artifact == ArtifactKind::Reasoning);
  CHECK(rec.label == Label::False);
  CHECK(rec.completion_tokens > 0);
}

TEST_CASE("ProntoQA answers about a negative query literal") {
  corpus::Problem alex;
  alex.id = "alex";
  alex.dataset = Dataset::ProntoQA;
  alex.context =
      "Every dumpus is not shy. Numpuses are dumpuses. Yumpuses are numpuses. Vumpuses are yumpuses. "
      "Tumpuses are vumpuses. Alex is a tumpus.";
  alex.question = "True or false: Alex is not shy.";
  alex.gold = Label::False;
  const std::string translation =
      "Facts:\nTumpus(Alex, True)\nRules:\nDumpus($x, True) ⇒ Shy($x, False)\nNumpus($x, True) ⇒ Dumpus($x, True)\n"
      "Yumpus($x, True) ⇒ Numpus($x, True)\nVumpus($x, True) ⇒ Yumpus($x, True)\n"
      "Tumpus($x, True) ⇒ Vumpus($x, True)\nQuery:\nShy(Alex, False)\n";
  auto backend = std::make_shared<llm::ScriptedBackend>();
  backend->add("alex/translator", translation);
  backend->add("alex/planner", "Chain the rules from Tumpus(Alex, True).");
  backend->add("alex/solver", "Thus, \"Shy(Alex, False)\" is true based on the logical deductions.");
  backend->add("alex/verifier",
               "Therefore, after verifying the translation between the original context and symbolic format, and the "
               "logical process, the original conclusion \"Shy(Alex, Flase) is true\" is valid and remains unchanged.");
  auto gateway = scripted(backend);

  RunConfig config;
  config.prontoqa_polarity = Polarity::AtomTruth;
  const auto atom = run_problem(alex, Method::SymbCoT, config, gateway);
  CHECK(atom.stages[3].label == Label::False);
  CHECK(atom.label == Label::False);
  const auto atom_tts = run_problem(alex, Method::TranslateThenSolve, config, gateway);
  CHECK(atom_tts.label == Label::False);

  config.prontoqa_polarity = Polarity::Statement;
  CHECK(run_problem(alex, Method::SymbCoT, config, gateway).label == Label::True);
  CHECK(run_problem(alex, Method::TranslateThenSolve, config, gateway).label == Label::True);
}

TEST_CASE("scripted mini-corpus runs") {
  const auto& problems = corpus::mini_corpus();
  auto gateway = scripted(transcripts());

  SUBCASE("TranslateThenSolve executes and solves every item") {
    for (const auto& r : run_batch(problems, Method::TranslateThenSolve, RunConfig{}, gateway)) {
      CAPTURE(r.id);
      CHECK(r.status == RunStatus::Ok);
      CHECK(r.executed);
      CHECK(r.label == r.gold);
      CHECK(r.stages.size() == 1);
    }
  }
  SUBCASE("SymbCoT reaches gold and the verifier label overrides the solver's") {
    for (const auto& r : run_batch(problems, Method::SymbCoT, RunConfig{}, gateway)) {
      CAPTURE(r.id);
      REQUIRE(r.stages.size() == 4);
      const auto& solver = r.stages[2];
      const auto& verifier = r.stages[3];
      CHECK(solver.stage == Stage::Solver);
      CHECK(verifier.stage == Stage::Verifier);
      CHECK(r.label == (verifier.label ? verifier.label : solver.label));
      CHECK(r.label == r.gold);
    }
    const auto tiger = run_problem(item("tiger"), Method::SymbCoT, RunConfig{}, gateway);
    CHECK(tiger.stages[2].label == Label::Unknown);
    CHECK(tiger.label == Label::False);
  }
  SUBCASE("stage counts per method") {
    const std::vector<std::pair<Method, std::size_t>> expected = {{Method::Naive, 1},
                                                                  {Method::CoT, 1},
                                                                  {Method::SymbCoT, 4},
                                                                  {Method::SymbCoTNoVerifier, 3},
                                                                  {Method::TranslateThenSolve, 1}};
    for (const auto& [method, count] : expected)
      for (const auto& r : run_batch(problems, method, RunConfig{}, gateway)) {
        CAPTURE(to_string(method));
        CAPTURE(r.id);
        CHECK(r.stages.size() == count);
        CHECK(r.status == RunStatus::Ok);
      }
    CHECK(run_problem(item("tiger"), Method::SymbCoTNoVerifier, RunConfig{}, gateway).label == Label::Unknown);
  }
}

TEST_CASE("run_batch keeps order, isolates failures and reports progress") {
  std::vector<corpus::Problem> problems = {item("car"), item("birds"), item("hawk")};
  auto gateway = scripted(transcripts());
  RunConfig config;
  config.parallelism = 2;
  std::vector<std::size_t> seen;
  const auto records = run_batch(problems, Method::TranslateThenSolve, config, gateway,
                                 [&](std::size_t done, std::size_t total, const RunRecord&) {
                                   CHECK(total == 3);
                                   seen.push_back(done);
                                 });
  REQUIRE(records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(records[i].id == problems[i].id);
  CHECK(seen == std::vector<std::size_t>{1, 2, 3});

  problems[1].id = "no_such_script";
  const auto mixed = run_batch(problems, Method::TranslateThenSolve, config, gateway);
  CHECK(mixed[0].status == RunStatus::Ok);
  CHECK(mixed[1].status == RunStatus::Error);
  CHECK(mixed[1].error.find("no_such_script") != std::string::npos);
  CHECK_FALSE(mixed[1].label);
  CHECK(mixed[2].status == RunStatus::Ok);
  CHECK(mixed[2].label == Label::False);
}

TEST_CASE("replay from a recorded cache is byte-identical") {
  testing::TempDir dir;
  auto cache = std::make_shared<llm::ResponseCache>(dir.path());
  const auto& problems = corpus::mini_corpus();
  llm::Gateway record(llm::Mode::Scripted, transcripts(), cache);
  const auto recorded = run_batch(problems, Method::SymbCoT, RunConfig{}, record);

  RunConfig config;
  config.parallelism = 3;
  llm::Gateway replay1(llm::Mode::Replay, nullptr, cache);
  llm::Gateway replay2(llm::Mode::Replay, nullptr, cache);
  const auto first = run_batch(problems, Method::SymbCoT, config, replay1);
  const auto second = run_batch(problems, Method::SymbCoT, config, replay2);
  CHECK(without_wall_time(first) == without_wall_time(second));
  CHECK(replay1.cache_hits() == 4 * problems.size());
  for (std::size_t i = 0; i < problems.size(); ++i) {
    CHECK(first[i].label == recorded[i].label);
    CHECK(first[i].stages.size() == recorded[i].stages.size());
  }

  llm::Gateway cold(llm::Mode::Replay, nullptr, std::make_shared<llm::ResponseCache>(dir.path() / "empty"));
  const auto miss = run_problem(item("car"), Method::SymbCoT, RunConfig{}, cold);
  CHECK(miss.status == RunStatus::Error);
  CHECK(miss.error.find("replay miss") != std::string::npos);
}

TEST_CASE("run records round-trip through JSON lines") {
  auto gateway = scripted(transcripts());
  RunConfig config;
  auto records = run_batch(corpus::mini_corpus(), Method::SymbCoT, config, gateway);
  auto backend = std::make_shared<llm::ScriptedBackend>();
  backend->add("car/translator", "broken");
  auto broken = scripted(backend);
  config.fallback = FallbackPolicy::Random;
  records.push_back(run_problem(item("car"), Method::TranslateThenSolve, config, broken));
  records.push_back(run_problem(item("hawk"), Method::TranslateThenSolve, config, broken));  // error status

  const auto text = to_jsonl(records);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(records.size()));
  CHECK(read_jsonl(text) == records);

  testing::TempDir dir;
  const auto path = dir.path() / "runs.jsonl";
  { std::ofstream(path) << text; }
  CHECK(read_jsonl_file(path) == records);

  CHECK_THROWS_WITH_AS(read_jsonl(to_json_line(records[0]) + "\n{\"id\": 3}\n"), doctest::Contains("line 2"),
                       RecordError);
  CHECK_THROWS_AS(read_jsonl_file(dir.path() / "missing.jsonl"), RecordError);
}

TEST_CASE("method and policy names") {
  CHECK(parse_method("symbcot") == Method::SymbCoT);
  CHECK(parse_method("translate_then_solve") == Method::TranslateThenSolve);
  CHECK(parse_method("tts") == Method::TranslateThenSolve);
  CHECK(parse_method("SymbCoT-no-verifier") == Method::SymbCoTNoVerifier);
  CHECK(parse_method("cot") == Method::CoT);
  CHECK_FALSE(parse_method("tot"));
  CHECK(parse_fallback("cot_backup") == FallbackPolicy::CotBackup);
  CHECK(parse_polarity("atom_truth") == Polarity::AtomTruth);
  for (Stage s : all_stages) CHECK(parse_stage(file_stem(s)) == s);
}

TEST_CASE("run configuration file") {
  SUBCASE("defaults") {
    const RunConfig c;
    CHECK(c.temperature == 0.0);
    CHECK(c.demo_count == 2);
    CHECK(c.fallback == FallbackPolicy::Abstain);
  }
  SUBCASE("values") {
    const auto c = parse_config(R"({"method": "symbcot", "model": "gpt-4-0613", "endpoint": "http://localhost:8080",
      "temperature": 0.5, "max_tokens": 512, "demos": 1, "fallback": "random", "seed": 42, "parallelism": 4,
      "prontoqa_polarity": "atom_truth", "templates": "prompts"})");
    CHECK(c.method == Method::SymbCoT);
    CHECK(c.run.model == "gpt-4-0613");
    CHECK(c.endpoint == "http://localhost:8080");
    CHECK(c.run.temperature == 0.5);
    CHECK(c.run.max_tokens == 512);
    CHECK(c.run.demo_count == 1);
    CHECK(c.run.fallback == FallbackPolicy::Random);
    CHECK(c.run.seed == 42);
    CHECK(c.run.parallelism == 4);
    CHECK(c.run.prontoqa_polarity == Polarity::AtomTruth);
    CHECK(c.run.template_dir == std::filesystem::path("prompts"));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_config(R"({"parallelism": 0})"), RecordError);
    CHECK_THROWS_AS(parse_config(R"({"colour": "blue"})"), RecordError);
    CHECK_THROWS_AS(parse_config(R"({"method": "tot"})"), RecordError);
    CHECK_THROWS_AS(parse_config(R"({"seed": "x"})"), RecordError);
    CHECK_THROWS_AS(parse_config("[1, 2"), RecordError);
  }
}
