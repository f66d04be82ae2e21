#pragma once

#include <string>
#include <vector>

#include "am/gateway/client.hpp"
#include "am/structural/io_table.hpp"

namespace am::specsyn {

struct SpecParseError : ToolError {
    using ToolError::ToolError;
};

struct ModuleSpec {
    std::string module;
    std::string overview;
    // one entry per IoTable row, in row order; "unknown" when the model
    // said nothing about a port
    std::vector<std::pair<std::string, std::string>> ports;
    std::string function_text;
    bool degraded_parse = false;
    std::string raw_text; // full completion, used by the stability metric

    struct Provenance {
        std::string template_id;
        std::string fingerprint;
        std::string timestamp; // empty in replay mode
    } provenance;
};

// Sends the prompt and parses the labeled Overview / Ports / Function
// sections. A completion without labels degrades to whole-text-as-function
// with degraded_parse set; an empty completion is a SpecParseError.
ModuleSpec generate_module_spec(const gateway::Prompt& p, gateway::Gateway& gw,
                                const structural::IoTable& table,
                                int run_index = 0);

// Parsing only, exposed for tests and replay tooling.
ModuleSpec parse_spec_completion(const std::string& text,
                                 const structural::IoTable& table);

} // namespace am::specsyn
