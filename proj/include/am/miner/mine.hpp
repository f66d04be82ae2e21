#pragma once

#include <string>
#include <vector>

#include "am/gateway/client.hpp"
#include "am/miner/assertion.hpp"
#include "am/specsyn/features.hpp"
#include "am/specsyn/prompt_builder.hpp"
#include "am/structural/chains.hpp"
#include "am/structural/io_table.hpp"

namespace am::miner {

struct MiningParseError : ToolError {
    using ToolError::ToolError;
};

// Builds the mining prompt: the assertion template verbatim, the numbered
// features, the module's I/O rows, its simplified chains, and the
// `module.signal_name` naming rule. At least one feature is required.
// Oversize prompts shed the longest chains first (logged).
gateway::Prompt compose_mining_prompt(
    const std::vector<specsyn::VerificationFeature>& features,
    const frontend::DesignDB& db, const structural::ChainSet& simplified,
    const structural::IoTable& table, const std::string& template_text,
    const specsyn::PromptBudget& budget, DiagnosticSink& diags);

// Extracts raw assertions from the completion: fenced code blocks split on
// top-level `;`, falling back to `assert property` lines when no fences
// exist. Prose-only completions yield an empty list plus a diagnostic;
// only an empty completion is an error.
std::vector<DeepAssertion> mine_assertions(const gateway::Prompt& p,
                                           gateway::Gateway& gw,
                                           const std::string& module,
                                           DiagnosticSink& diags);

// Parsing only, exposed for tests and replay tooling.
std::vector<DeepAssertion> parse_mining_completion(const std::string& text,
                                                   const std::string& module,
                                                   DiagnosticSink& diags);

} // namespace am::miner
