#pragma once

#include <map>
#include <string>
#include <vector>

#include "am/support/diagnostics.hpp"

namespace am::gateway {

struct Prompt {
    std::string system;
    std::string user;
    double temperature = 0.2;
    int max_tokens = 2048;
    std::string template_id;
    std::map<std::string, std::string> placeholders; // as rendered
};

struct Completion {
    std::string text;
    std::string finish_reason;
    int prompt_tokens = 0;
    int completion_tokens = 0;
    std::string provider; // model name or "replay"
};

struct TemplateError : ToolError {
    std::vector<std::string> missing;
    explicit TemplateError(std::vector<std::string> names);
};

// Substitutes every `{name}` placeholder; `{{` renders a literal `{` and
// `}}` a literal `}`. Throws TemplateError listing any unresolved names.
std::string render_template(const std::string& tmpl,
                            const std::map<std::string, std::string>& values);

// Stable across processes and platforms. `run_index` distinguishes
// repeated generations of the same prompt (stability protocol).
std::string fingerprint(const Prompt& p, int run_index = 0);

} // namespace am::gateway
