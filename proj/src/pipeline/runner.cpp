#include "symbcot/pipeline/runner.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "symbcot/csp/parse.hpp"
#include "symbcot/csp/solver.hpp"
#include "symbcot/inference/fol_decider.hpp"
#include "symbcot/inference/forward_chain.hpp"
#include "symbcot/syntax/translation.hpp"

namespace symbcot::pipeline {

using corpus::Dataset;
using corpus::Family;
using logic::Label;
using logic::Prediction;

namespace {

ArtifactKind artifact_of(Stage s) {
  switch (s) {
    case Stage::Translator: return ArtifactKind::Translation;
    case Stage::Planner: return ArtifactKind::Plan;
    case Stage::Solver: return ArtifactKind::Reasoning;
    case Stage::Verifier: return ArtifactKind::Verdict;
    case Stage::Naive:
    case Stage::CoT: return ArtifactKind::Answer;
  }
  return ArtifactKind::Answer;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void record_diagnostics(StageRecord& rec, const std::vector<syntax::ParseDiagnostic>& diags) {
  for (const auto& d : diags) {
    std::string prefix = d.is_error() ? "error" : "warning";
    if (d.line) prefix += " line " + std::to_string(d.line);
    rec.diagnostics.push_back(prefix + ": " + d.message);
  }
}

// The parsed translation of a Translator stage, kept for the engines.
struct Translation {
  std::optional<syntax::TranslationBlock> fol;
  std::optional<csp::CspModel> csp;
};

Translation parse_translation(StageRecord& rec, const corpus::Problem& p) {
  Translation out;
  if (p.family() == Family::FOL) {
    auto parsed = syntax::parse_translation_block(rec.response);
    record_diagnostics(rec, parsed.diagnostics);
    if (parsed.value) {
      rec.parsed = parsed.value->executable;
      rec.canonical = syntax::print_translation_block(*parsed.value);
      out.fol = std::move(parsed.value);
    }
  } else {
    auto parsed = csp::parse_csp_block(rec.response);
    record_diagnostics(rec, parsed.diagnostics);
    if (parsed.value) {
      rec.parsed = std::none_of(parsed.diagnostics.begin(), parsed.diagnostics.end(),
                                [](const syntax::ParseDiagnostic& d) { return d.is_error(); });
      rec.canonical = csp::print_csp_block(*parsed.value);
      out.csp = std::move(parsed.value);
    }
  }
  return out;
}

// Maps a statement-truth label to the configured ProntoQA reading.
Prediction apply_polarity(Prediction label, const corpus::Problem& p, const RunConfig& config,
                          const Translation& translation) {
  if (!label || p.dataset != Dataset::ProntoQA || config.prontoqa_polarity != Polarity::AtomTruth) return label;
  if (!translation.fol || !translation.fol->query || translation.fol->query->polarity) return label;
  if (*label == Label::True) return Label::False;
  if (*label == Label::False) return Label::True;
  return label;
}

struct EngineOutcome {
  Prediction label;
  std::string detail;
};

EngineOutcome run_engine(const corpus::Problem& p, const Translation& t) {
  try {
    if (t.fol) {
      const auto& block = *t.fol;
      Label verdict;
      if (block.kb && block.query) {
        verdict = inference::decide(*block.kb, *block.query);
      } else {
        std::vector<logic::Formula> premises;
        for (const auto& g : block.premises) premises.push_back(g.formula);
        verdict = inference::decide_formula(premises, block.statement->formula);
      }
      const auto space = corpus::label_space(p);
      if (std::find(space.begin(), space.end(), verdict) == space.end())
        return {std::nullopt, "engine verdict " + logic::to_string(verdict) + " is outside the label space"};
      return {verdict, logic::to_string(verdict)};
    }
    if (t.csp) {
      const auto verdict = csp::evaluate_queries(*t.csp);
      const auto mode = csp::detect_question_mode(p.question);
      const auto selection = csp::select_answer(verdict, mode);
      std::string detail = csp::to_string(mode) + ":";
      for (const auto& o : verdict.options) detail += std::string(" ") + o.letter + "=" + csp::to_string(o.modality);
      if (!selection.answer) {
        detail += "; " + std::to_string(selection.candidates.size()) + " matching options";
        return {std::nullopt, detail};
      }
      const auto space = corpus::label_space(p);
      if (std::find(space.begin(), space.end(), *selection.answer) == space.end())
        return {std::nullopt, detail + "; answer outside the options"};
      return {selection.answer, detail};
    }
    return {std::nullopt, "no translation"};
  } catch (const std::exception& e) {
    return {std::nullopt, std::string("error: ") + e.what()};
  }
}

Bindings bindings_for(Stage stage, const corpus::Problem& p, const std::vector<StageRecord>& done) {
  auto response_of = [&](Stage s) -> std::string {
    for (const auto& r : done)
      if (r.stage == s) return r.response;
    return {};
  };
  Bindings b;
  switch (stage) {
    case Stage::Translator:
    case Stage::Naive:
    case Stage::CoT:
      b = {{"context", p.context}, {"question", p.question}, {"options", render_options(p)}};
      break;
    case Stage::Planner:
      b = {{"context", p.context}, {"premises_sym", response_of(Stage::Translator)}};
      break;
    case Stage::Solver:
      b = {{"premises_sym", response_of(Stage::Translator)},
           {"plan", response_of(Stage::Planner)},
           {"question", p.question},
           {"options", render_options(p)}};
      break;
    case Stage::Verifier:
      b = {{"premises_sym", response_of(Stage::Translator)},
           {"reasoning", response_of(Stage::Solver)},
           {"question", p.question},
           {"options", render_options(p)}};
      break;
  }
  // Responses are inserted verbatim; a trailing newline would double up
  // against the template's own line breaks.
  for (auto& [k, v] : b)
    while (!v.empty() && v.back() == '\n') v.pop_back();
  return b;
}

}  // namespace

std::string render_options(const corpus::Problem& p) {
  std::string out;
  if (p.family() == Family::FOL) {
    out = "A) True\nB) False";
    if (p.dataset != Dataset::ProntoQA) out += "\nC) " + corpus::surface_label(p.dataset, Label::Unknown);
    return out;
  }
  for (const auto& o : p.options) {
    if (!out.empty()) out += '\n';
    out += std::string(1, o.letter) + ") " + o.text;
  }
  return out;
}

LetterAliases letter_aliases(const corpus::Problem& p) {
  if (p.family() != Family::FOL) return {};
  LetterAliases a = {{'A', Label::True}, {'B', Label::False}};
  if (p.dataset != Dataset::ProntoQA) a['C'] = Label::Unknown;
  return a;
}

namespace {

StageRecord run_stage_parsed(const PromptTemplate& t, const Bindings& bindings, const corpus::Problem& p,
                             const RunConfig& config, llm::Gateway& gateway, Translation* translation) {
  StageRecord rec;
  rec.stage = t.stage;
  rec.artifact = artifact_of(t.stage);
  llm::CompletionRequest req;
  req.model = config.model;
  req.messages = build_messages(t, bindings, config.demo_count);
  req.temperature = config.temperature;
  req.max_tokens = config.max_tokens;
  req.tag = p.id + "/" + file_stem(t.stage);
  rec.prompt = flatten(req.messages);
  const auto resp = gateway.complete(req);
  rec.response = resp.content;
  rec.prompt_tokens = resp.prompt_tokens;
  rec.completion_tokens = resp.completion_tokens;
  rec.backend = llm::to_string(resp.backend);
  switch (t.stage) {
    case Stage::Translator: {
      auto parsed = parse_translation(rec, p);
      if (translation) *translation = std::move(parsed);
      break;
    }
    case Stage::Planner: break;
    case Stage::Solver:
    case Stage::Verifier:
    case Stage::Naive:
    case Stage::CoT: rec.label = extract_label(rec.response, corpus::label_space(p), letter_aliases(p)); break;
  }
  return rec;
}

}  // namespace

StageRecord run_stage(const PromptTemplate& t, const Bindings& bindings, const corpus::Problem& p,
                      const RunConfig& config, llm::Gateway& gateway) {
  return run_stage_parsed(t, bindings, p, config, gateway, nullptr);
}

RunRecord run_problem(const corpus::Problem& p, Method method, const RunConfig& config, llm::Gateway& gateway) {
  const auto started = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.id = p.id;
  rec.dataset = p.dataset;
  rec.method = method;
  rec.gold = p.gold;
  rec.depth = p.depth;
  auto finish = [&] {
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rec;
  };
  try {
    Translation translation;
    for (Stage stage : stages_of(method)) {
      const auto t = load_template(stage, p.dataset, config.template_dir);
      rec.stages.push_back(
          run_stage_parsed(t, bindings_for(stage, p, rec.stages), p, config, gateway, &translation));
    }
    for (auto& s : rec.stages)
      if (s.stage == Stage::Solver || s.stage == Stage::Verifier) s.label = apply_polarity(s.label, p, config, translation);

    switch (method) {
      case Method::Naive:
      case Method::CoT:
        rec.label = rec.stages.back().label;
        rec.executed = rec.label.has_value();
        break;
      case Method::SymbCoT:
      case Method::SymbCoTNoVerifier: {
        Prediction solver, verifier;
        for (const auto& s : rec.stages) {
          if (s.stage == Stage::Solver) solver = s.label;
          if (s.stage == Stage::Verifier) verifier = s.label;
        }
        rec.label = verifier ? verifier : solver;
        rec.executed = rec.label.has_value();
        break;
      }
      case Method::TranslateThenSolve: {
        const bool parsed = rec.stages.front().parsed;
        if (!parsed) {
          rec.engine_result = "translation did not parse";
        } else {
          auto outcome = run_engine(p, translation);
          rec.engine_result = outcome.detail;
          rec.label = apply_polarity(outcome.label, p, config, translation);
        }
        rec.executed = parsed && rec.label.has_value();
        break;
      }
    }

    if (!rec.executed) {
      rec.fallback_used = config.fallback;
      switch (config.fallback) {
        case FallbackPolicy::Abstain: rec.label = std::nullopt; break;
        case FallbackPolicy::Random: {
          const auto space = corpus::label_space(p);
          std::mt19937_64 rng(config.seed ^ fnv1a(p.id));
          std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
          rec.label = space[pick(rng)];
          break;
        }
        case FallbackPolicy::CotBackup: {
          const auto t = load_template(Stage::CoT, p.dataset, config.template_dir);
          rec.stages.push_back(run_stage(t, bindings_for(Stage::CoT, p, rec.stages), p, config, gateway));
          rec.label = rec.stages.back().label;
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    rec.status = RunStatus::Error;
    rec.error = e.what();
    rec.label = std::nullopt;
    rec.executed = false;
  }
  return finish();
}

std::vector<RunRecord> run_batch(const std::vector<corpus::Problem>& problems, Method method, const RunConfig& config,
                                 llm::Gateway& gateway, const ProgressHook& progress) {
  std::vector<RunRecord> out(problems.size());
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < problems.size();) {
      out[i] = run_problem(problems[i], method, config, gateway);
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(++done, problems.size(), out[i]);
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.parallelism, problems.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace symbcot::pipeline
