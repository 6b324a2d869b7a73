#pragma once

#include <functional>
#include <vector>

#include "symbcot/corpus/problem.hpp"
#include "symbcot/llm/gateway.hpp"
#include "symbcot/pipeline/extract.hpp"
#include "symbcot/pipeline/records.hpp"
#include "symbcot/pipeline/templates.hpp"

namespace symbcot::pipeline {

// The option list shown in prompts: the problem's options, or
// "A) True / B) False [/ C) Unknown|Uncertain]" for true/false datasets.
std::string render_options(const corpus::Problem& p);
// Letters of the rendered true/false options (empty for multiple choice).
LetterAliases letter_aliases(const corpus::Problem& p);

// Renders the template with its demos, sends it as "<problem id>/<stage>" and
// parses the response: Translator → translation block or CSP block, Solver,
// Verifier, Naive and CoT → extracted label. Parse failures are recorded, not
// thrown; gateway errors propagate.
StageRecord run_stage(const PromptTemplate& t, const Bindings& bindings, const corpus::Problem& p,
                      const RunConfig& config, llm::Gateway& gateway);

// Runs every stage of `method` in order and settles the final label:
// SymbCoT takes the Verifier's label when it has one, otherwise the
// Solver's; TranslateThenSolve hands the translation to the symbolic
// engines. When no label results, the configured fallback decides. Gateway
// and template errors yield a record with error status.
RunRecord run_problem(const corpus::Problem& p, Method method, const RunConfig& config, llm::Gateway& gateway);

using ProgressHook = std::function<void(std::size_t done, std::size_t total, const RunRecord& latest)>;

// Runs problems on `config.parallelism` threads; records keep input order
// and one problem's failure never affects another.
std::vector<RunRecord> run_batch(const std::vector<corpus::Problem>& problems, Method method,
                                 const RunConfig& config, llm::Gateway& gateway, const ProgressHook& progress = {});

}  // namespace symbcot::pipeline
