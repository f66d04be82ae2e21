#pragma once

#include <string>
#include <vector>

#include "am/specsyn/module_spec.hpp"

namespace am::specsyn {

struct FeatureParseError : ToolError {
    using ToolError::ToolError;
};

enum class FeatureCategory { Handshake, DataIntegrity, Reset, Control, Other };

const char* feature_category_name(FeatureCategory c);

struct VerificationFeature {
    std::string module;
    int ordinal = 0; // 1-based
    std::string id;  // "<module>-<ordinal>"
    std::string statement;
    std::vector<std::string> signals; // port names only
    FeatureCategory category = FeatureCategory::Other;
};

struct FeatureExtraction {
    std::vector<VerificationFeature> features;
    std::vector<Diagnostic> dropped; // items naming unknown signals
};

// Builds the decomposition prompt for a module specification.
gateway::Prompt compose_feature_prompt(const ModuleSpec& spec,
                                       const structural::IoTable& table,
                                       const std::string& template_text);

// Asks the LLM for a numbered list of atomic statements and parses it
// line-wise. Items naming signals outside the I/O table are dropped with
// a diagnostic. Throws FeatureParseError when nothing parses.
FeatureExtraction extract_features(const ModuleSpec& spec,
                                   const structural::IoTable& table,
                                   gateway::Gateway& gw,
                                   const std::string& template_text);

// Parsing only, exposed for tests and replay tooling.
FeatureExtraction parse_feature_completion(const std::string& text,
                                           const structural::IoTable& table,
                                           const std::string& module);

} // namespace am::specsyn
