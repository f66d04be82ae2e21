#pragma once

#include <string>

#include "am/gateway/prompt.hpp"
#include "am/structural/chains.hpp"
#include "am/structural/io_table.hpp"
#include "am/structural/mcg.hpp"

namespace am::specsyn {

struct ContextOverflow : ToolError {
    using ToolError::ToolError;
};

struct PromptBudget {
    size_t max_tokens = 8000; // approx_tokens over the rendered user text
};

inline constexpr const char* kSystemText =
    "You are a hardware design and verification assistant. Answer precisely "
    "and do not invent signal names.";

// Builds the module-specification prompt from structural context only:
// design-spec excerpt, the module's I/O table, its 1-hop MCG neighborhood,
// and the simplified chains that touch its ports. Module body source never
// enters the prompt. Oversize prompts are reduced by dropping the longest
// chains first, then truncating the design-spec excerpt; each reduction is
// logged. Throws ContextOverflow only when the skeleton alone exceeds the
// budget.
gateway::Prompt compose_spec_prompt(
    const std::string& module, const frontend::DesignDB& db,
    const structural::ModuleCallGraph& mcg, const structural::IoTable& table,
    const structural::ChainSet& simplified_chains,
    const std::string& design_spec, const std::string& template_text,
    const PromptBudget& budget, DiagnosticSink& diags);

// Selects the simplified chains containing at least one port node of
// `module`, rendered one per line ("none" when empty).
std::string chains_for_module(const std::string& module,
                              const frontend::DesignDB& db,
                              const structural::ChainSet& simplified_chains);

// Parent and child module names from the MCG, one hop.
std::string mcg_neighborhood(const std::string& module,
                             const structural::ModuleCallGraph& mcg);

} // namespace am::specsyn
