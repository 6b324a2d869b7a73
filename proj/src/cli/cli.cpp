#include "symbcot/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "symbcot/corpus/corpus.hpp"
#include "symbcot/csp/parse.hpp"
#include "symbcot/csp/solver.hpp"
#include "symbcot/evalkit/report.hpp"
#include "symbcot/inference/fol_decider.hpp"
#include "symbcot/inference/forward_chain.hpp"
#include "symbcot/logic/knowledge_base.hpp"
#include "symbcot/pipeline/runner.hpp"
#include "symbcot/syntax/translation.hpp"

namespace symbcot::cli {

namespace fs = std::filesystem;

namespace {

// A usage problem detected after argument parsing (bad value, missing file).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  ss << file.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + path);
}

void print_diagnostics(const std::vector<syntax::ParseDiagnostic>& diags, std::ostream& err) {
  for (const auto& d : diags) err << syntax::to_string(d) << "\n";
}

// ---- parse ---------------------------------------------------------------

struct ParseOptions {
  std::string file = "-";
  std::string format = "fol";
};

int cmd_parse(const ParseOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto text = read_input(o.file, in);
  if (o.format == "fol") {
    auto parsed = syntax::parse_translation_block(text);
    print_diagnostics(parsed.diagnostics, err);
    if (!parsed.value) {
      if (parsed.diagnostics.empty()) err << "error: no statement to parse\n";
      return kDomainFailure;
    }
    out << syntax::print_translation_block(*parsed.value);
    return parsed.value->executable && !parsed.has_errors() ? kSuccess : kDomainFailure;
  }
  auto parsed = csp::parse_csp_block(text);
  print_diagnostics(parsed.diagnostics, err);
  if (!parsed.value) return kDomainFailure;
  out << csp::print_csp_block(*parsed.value);
  return parsed.has_errors() ? kDomainFailure : kSuccess;
}

// ---- solve ---------------------------------------------------------------

std::string modality_name(csp::Modality m) {
  switch (m) {
    case csp::Modality::MustBeTrue: return "MustBeTrue";
    case csp::Modality::MayBeTrue: return "MayBeTrue";
    case csp::Modality::CannotBeTrue: return "CannotBeTrue";
  }
  return "?";
}

struct SolveOptions {
  std::string file = "-";
  std::string engine = "fol";
  std::string question;
};

int cmd_solve(const SolveOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto text = read_input(o.file, in);
  try {
    if (o.engine == "fol") {
      auto parsed = syntax::parse_translation_block(text);
      print_diagnostics(parsed.diagnostics, err);
      if (!parsed.value || !parsed.value->executable) {
        err << "error: translation is not executable\n";
        return kDomainFailure;
      }
      const auto& b = *parsed.value;
      logic::Label verdict;
      if (b.kb && b.query) {
        verdict = inference::decide(*b.kb, *b.query);
      } else {
        std::vector<logic::Formula> premises;
        for (const auto& g : b.premises) premises.push_back(g.formula);
        verdict = inference::decide_formula(premises, b.statement->formula);
      }
      out << logic::to_string(verdict) << "\n";
      return kSuccess;
    }
    auto parsed = csp::parse_csp_block(text);
    print_diagnostics(parsed.diagnostics, err);
    if (!parsed.value || parsed.has_errors()) {
      err << "error: model did not parse\n";
      return kDomainFailure;
    }
    const auto verdict = csp::evaluate_queries(*parsed.value);
    const auto mode = csp::detect_question_mode(o.question);
    const auto selection = csp::select_answer(verdict, mode);
    for (const auto& opt : verdict.options)
      err << opt.letter << ": " << csp::to_string(opt.modality) << " (" << opt.satisfied << "/"
          << verdict.solution_count << " solutions)\n";
    if (!selection.answer) {
      err << "no single answer for " << csp::to_string(mode) << ": " << selection.candidates.size()
          << " options match\n";
      out << "Undecided\n";
      return kDomainFailure;
    }
    const auto* chosen = verdict.find(logic::letter_of(*selection.answer));
    out << logic::to_string(*selection.answer) << " (" << modality_name(chosen->modality) << ")\n";
    return kSuccess;
  } catch (const logic::InconsistencyError& e) {
    err << e.what() << "\n";
    return kDomainFailure;
  } catch (const logic::KnowledgeBaseError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const inference::InconsistentPremises& e) {
    err << e.what() << "\n";
    return kDomainFailure;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
}

// ---- run -----------------------------------------------------------------

struct RunOptions {
  std::string config_file;
  std::string method;
  std::string dataset;
  std::string input;
  std::size_t limit = 0;
  std::string replay;
  std::string script;
  std::string cache_dir;
  std::string out;
  std::string model;
  std::string endpoint;
  std::string api_key_env;
  std::string fallback;
  std::string polarity;
  std::string templates;
  std::optional<std::size_t> parallelism;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> demos;
  bool quiet = false;
};

std::vector<corpus::Problem> load_problems(const std::string& dataset, const std::string& input, std::ostream& err) {
  if (dataset == "minicorpus" || dataset == "mini") {
    if (!input.empty()) throw UsageError("--input is not used with the mini-corpus");
    return corpus::mini_corpus();
  }
  const auto d = corpus::parse_dataset(dataset);
  if (!d) throw UsageError("unknown dataset '" + dataset + "'");
  if (input.empty()) throw UsageError("--input is required for dataset " + dataset);
  if (!fs::exists(input)) throw UsageError("no such file " + input);
  auto loaded = corpus::load(*d, input);
  for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
  for (const auto& e : loaded.errors) err << "skipped record " << e->what() << "\n";
  return std::move(loaded.problems);
}

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  pipeline::FileConfig file;
  if (!o.config_file.empty()) {
    if (!fs::exists(o.config_file)) throw UsageError("no such config file " + o.config_file);
    try {
      file = pipeline::load_config(o.config_file);
    } catch (const pipeline::RecordError& e) {
      throw UsageError(e.what());
    }
  }
  auto pick = [](const std::string& flag, const std::string& from_file, const char* fallback) {
    return !flag.empty() ? flag : !from_file.empty() ? from_file : std::string(fallback);
  };
  const auto dataset = pick(o.dataset, file.dataset, "minicorpus");
  const auto input = pick(o.input, file.input, "");
  const auto cache_dir = pick(o.cache_dir, file.cache_dir, "");
  const auto out_path = pick(o.out, file.out, "-");
  const auto api_key_env = pick(o.api_key_env, file.api_key_env, "OPENAI_API_KEY");
  auto config = file.run;
  auto method = file.method.value_or(pipeline::Method::SymbCoT);
  if (!o.method.empty()) {
    auto m = pipeline::parse_method(o.method);
    if (!m) throw UsageError("unknown method '" + o.method + "'");
    method = *m;
  }
  if (!o.model.empty()) config.model = o.model;
  if (!o.fallback.empty()) {
    auto f = pipeline::parse_fallback(o.fallback);
    if (!f) throw UsageError("unknown fallback policy '" + o.fallback + "'");
    config.fallback = *f;
  }
  if (!o.polarity.empty()) {
    auto p = pipeline::parse_polarity(o.polarity);
    if (!p) throw UsageError("unknown polarity '" + o.polarity + "'");
    config.prontoqa_polarity = *p;
  }
  if (!o.templates.empty()) config.template_dir = o.templates;
  if (o.parallelism) config.parallelism = *o.parallelism;
  if (o.seed) config.seed = *o.seed;
  if (o.demos) config.demo_count = *o.demos;
  if (config.parallelism == 0) throw UsageError("--parallelism must be at least 1");

  auto problems = load_problems(dataset, input, err);
  if (o.limit && problems.size() > o.limit) problems.resize(o.limit);

  if (!o.replay.empty() && !o.script.empty()) throw UsageError("--replay and --script are exclusive");
  std::shared_ptr<llm::ResponseCache> cache;
  std::unique_ptr<llm::Gateway> gateway;
  if (!o.replay.empty()) {
    if (!fs::is_directory(o.replay)) throw UsageError("no replay directory " + o.replay);
    cache = std::make_shared<llm::ResponseCache>(o.replay);
    gateway = std::make_unique<llm::Gateway>(llm::Mode::Replay, nullptr, cache);
  } else if (!o.script.empty()) {
    if (!fs::exists(o.script)) throw UsageError("no such transcript file " + o.script);
    if (!cache_dir.empty()) cache = std::make_shared<llm::ResponseCache>(cache_dir);
    gateway = std::make_unique<llm::Gateway>(llm::Mode::Scripted, llm::ScriptedBackend::from_transcripts(o.script),
                                             cache);
  } else {
    const char* key = std::getenv(api_key_env.c_str());
    if (!key || !*key) throw UsageError("live runs need an API key in $" + api_key_env + " (or use --replay/--script)");
    llm::LiveConfig live;
    live.api_key = key;
    if (!file.endpoint.empty()) live.endpoint = file.endpoint;
    if (!o.endpoint.empty()) live.endpoint = o.endpoint;
    cache = std::make_shared<llm::ResponseCache>(cache_dir.empty() ? ".symbcot-cache" : cache_dir);
    gateway = std::make_unique<llm::Gateway>(llm::Mode::Live, std::make_shared<llm::LiveBackend>(live), cache,
                                             config.parallelism);
  }

  pipeline::ProgressHook progress;
  if (!o.quiet)
    progress = [&err](std::size_t done, std::size_t total, const pipeline::RunRecord& r) {
      err << "[" << done << "/" << total << "] " << r.id << " → " << logic::to_string(r.label)
          << (r.status == pipeline::RunStatus::Error ? " (error: " + r.error + ")" : "") << "\n";
    };
  auto records = pipeline::run_batch(problems, method, config, *gateway, progress);
  // Offline runs must be reproducible byte for byte; timings are meaningless there.
  if (gateway->mode() != llm::Mode::Live)
    for (auto& r : records) r.wall_time = 0;
  write_output(out_path, pipeline::to_jsonl(records), out);

  std::size_t failures = 0;
  for (const auto& r : records)
    if (r.status == pipeline::RunStatus::Error) ++failures;
  if (failures) {
    err << failures << " of " << records.size() << " problems failed:\n";
    for (const auto& r : records)
      if (r.status == pipeline::RunStatus::Error) err << "  " << r.id << ": " << r.error << "\n";
    return kDomainFailure;
  }
  return kSuccess;
}

// ---- eval / report -------------------------------------------------------

struct EvalOptions {
  std::string records = "-";
  std::string gold = "records";
  std::string dataset;
  std::string annotations;
  std::string format = "markdown";
  std::string out = "-";
};

int cmd_eval(const EvalOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto records = pipeline::read_jsonl(read_input(o.records, in));
  evalkit::Golds golds;
  if (o.gold == "records") {
    golds = evalkit::golds_of(records);
  } else if (o.gold == "minicorpus" || o.gold == "mini") {
    for (const auto& p : corpus::mini_corpus()) golds[p.id] = p.gold;
  } else {
    if (o.dataset.empty()) throw UsageError("--dataset is required with a gold file");
    for (const auto& p : load_problems(o.dataset, o.gold, err)) golds[p.id] = p.gold;
  }
  std::optional<evalkit::FaithfulnessTally> tally;
  if (!o.annotations.empty())
    tally = evalkit::faithfulness_tally(evalkit::parse_annotations(read_input(o.annotations, in)));
  const auto report = evalkit::evaluate(records, golds, tally);
  write_output(o.out, evalkit::render_report(report, *evalkit::parse_format(o.format)), out);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  return kSuccess;
}

struct ReportOptions {
  std::vector<std::string> files;
  std::string out = "-";
};

int cmd_report(const ReportOptions& o, std::ostream& out) {
  std::vector<evalkit::EvalReport> reports;
  for (const auto& f : o.files) {
    if (!fs::exists(f)) throw UsageError("no such report " + f);
    reports.push_back(evalkit::load_report(f));
  }
  write_output(o.out, evalkit::render_comparison(reports), out);
  return kSuccess;
}

// ---- cache ---------------------------------------------------------------

std::string first_line(const std::string& s, std::size_t width) {
  auto line = s.substr(0, s.find('\n'));
  if (line.size() > width) line = line.substr(0, width) + "...";
  return line;
}

int cmd_cache_ls(const std::string& dir, std::ostream& out) {
  if (!fs::is_directory(dir)) throw UsageError("no cache directory " + dir);
  const auto entries = llm::ResponseCache(dir).list();
  for (const auto& e : entries) {
    const std::string prompt = e.request.messages.empty() ? "" : e.request.messages.back().content;
    out << e.key.substr(0, 16) << "  " << e.timestamp << "  " << e.request.model << "  "
        << e.response.completion_tokens << " tokens  " << first_line(prompt, 60) << "\n";
  }
  out << entries.size() << " entries\n";
  return kSuccess;
}

int cmd_cache_gc(const std::string& dir, std::optional<double> max_age_days, std::ostream& out) {
  if (!fs::is_directory(dir)) throw UsageError("no cache directory " + dir);
  std::optional<std::chrono::seconds> max_age;
  if (max_age_days) max_age = std::chrono::seconds(static_cast<long long>(*max_age_days * 86400));
  const auto r = llm::ResponseCache(dir).gc(max_age);
  out << "removed " << r.removed_temp << " temporary, " << r.removed_corrupt << " corrupt, " << r.removed_old
      << " expired; kept " << r.kept << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic chain-of-thought reasoning: parse, solve, run, evaluate and report"};
  app.name("symbcot");
  app.require_subcommand(1);

  ParseOptions parse_opts;
  auto* parse = app.add_subcommand("parse", "Parse a FOL translation block or CSP model and print it canonically");
  parse->add_option("file", parse_opts.file, "Input file, '-' for stdin");
  parse->add_option("--format", parse_opts.format, "Input language")->check(CLI::IsMember({"fol", "csp"}));

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Answer a translation with the symbolic engines");
  solve->add_option("file", solve_opts.file, "Input file, '-' for stdin");
  solve->add_option("--engine", solve_opts.engine, "Engine")->check(CLI::IsMember({"fol", "csp"}));
  solve->add_option("--question", solve_opts.question, "Question text, selecting must/could/cannot (CSP)");

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run a method over a dataset and write JSON-lines run records");
  run->add_option("--config", run_opts.config_file, "JSON run configuration; flags override it");
  run->add_option("--method", run_opts.method, "naive, cot, symbcot, symbcot_no_verifier, translate_then_solve");
  run->add_option("--dataset", run_opts.dataset, "minicorpus or a dataset name (with --input)");
  run->add_option("--input", run_opts.input, "Dataset file");
  run->add_option("--limit", run_opts.limit, "Run at most this many problems");
  run->add_option("--replay", run_opts.replay, "Serve responses only from this cache directory");
  run->add_option("--script", run_opts.script, "Scripted transcripts {id: {stage: response}}");
  run->add_option("--cache-dir", run_opts.cache_dir, "Response cache (records scripted runs)");
  run->add_option("--out", run_opts.out, "Output file, '-' for stdout");
  run->add_option("--model", run_opts.model, "Model name");
  run->add_option("--endpoint", run_opts.endpoint, "Chat-completions endpoint URL");
  run->add_option("--api-key-env", run_opts.api_key_env, "Environment variable holding the API key");
  run->add_option("--fallback", run_opts.fallback, "abstain, random or cot_backup");
  run->add_option("--polarity", run_opts.polarity, "ProntoQA label reading: statement or atom_truth");
  run->add_option("--templates", run_opts.templates, "Directory overriding the embedded prompt templates");
  run->add_option("--parallelism", run_opts.parallelism, "Concurrent problems");
  run->add_option("--seed", run_opts.seed, "Seed for the random fallback");
  run->add_option("--demos", run_opts.demos, "Few-shot demos per prompt");
  run->add_flag("--quiet", run_opts.quiet, "No progress on stderr");

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Score run records and render an evaluation report");
  eval->add_option("records", eval_opts.records, "Run records (JSON lines), '-' for stdin");
  eval->add_option("--gold", eval_opts.gold, "records, minicorpus, or a dataset file (with --dataset)");
  eval->add_option("--dataset", eval_opts.dataset, "Dataset name of the gold file");
  eval->add_option("--annotations", eval_opts.annotations, "Faithfulness CSV problem_id,annotator_id,verdict");
  eval->add_option("--format", eval_opts.format, "Report format")->check(CLI::IsMember({"markdown", "csv", "json"}));
  eval->add_option("--out", eval_opts.out, "Output file, '-' for stdout");

  ReportOptions report_opts;
  auto* report = app.add_subcommand("report", "Merge JSON evaluation reports into one comparison table");
  report->add_option("reports", report_opts.files, "Reports written by eval --format json")->required();
  report->add_option("--out", report_opts.out, "Output file, '-' for stdout");

  auto* cache = app.add_subcommand("cache", "Inspect or clean a response cache");
  cache->require_subcommand(1);
  std::string cache_dir = ".symbcot-cache";
  std::optional<double> max_age_days;
  auto* ls = cache->add_subcommand("ls", "List cached responses");
  ls->add_option("--cache-dir", cache_dir, "Cache directory");
  auto* gc = cache->add_subcommand("gc", "Remove temporary, corrupt and (with --max-age-days) old entries");
  gc->add_option("--cache-dir", cache_dir, "Cache directory");
  gc->add_option("--max-age-days", max_age_days, "Remove entries older than this");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) {
        err << sub->help();
        return kUsageError;
      }
    err << app.help();
    return kUsageError;
  }

  try {
    if (parse->parsed()) return cmd_parse(parse_opts, in, out, err);
    if (solve->parsed()) return cmd_solve(solve_opts, in, out, err);
    if (run->parsed()) return cmd_run(run_opts, out, err);
    if (eval->parsed()) return cmd_eval(eval_opts, in, out, err);
    if (report->parsed()) return cmd_report(report_opts, out);
    if (ls->parsed()) return cmd_cache_ls(cache_dir, out);
    if (gc->parsed()) return cmd_cache_gc(cache_dir, max_age_days, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsageError;
}

}  // namespace symbcot::cli
