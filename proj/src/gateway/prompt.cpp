#include "am/gateway/prompt.hpp"

#include <algorithm>
#include <cstdio>

#include "am/support/text.hpp"

namespace am::gateway {

TemplateError::TemplateError(std::vector<std::string> names)
    : ToolError("template placeholders missing values: " + [&] {
          std::string s;
          for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
          return s;
      }()),
      missing(std::move(names)) {}

std::string render_template(const std::string& tmpl,
                            const std::map<std::string, std::string>& values) {
    std::string out;
    std::vector<std::string> missing;
    size_t i = 0;
    while (i < tmpl.size()) {
        char c = tmpl[i];
        if (c == '{' && i + 1 < tmpl.size() && tmpl[i + 1] == '{') {
            out.push_back('{');
            i += 2;
            continue;
        }
        if (c == '}' && i + 1 < tmpl.size() && tmpl[i + 1] == '}') {
            out.push_back('}');
            i += 2;
            continue;
        }
        if (c == '{') {
            size_t end = tmpl.find('}', i + 1);
            if (end == std::string::npos) {
                // lone brace at the tail, keep as-is
                out.push_back(c);
                ++i;
                continue;
            }
            std::string name = tmpl.substr(i + 1, end - i - 1);
            auto it = values.find(name);
            if (it == values.end()) {
                if (std::find(missing.begin(), missing.end(), name) ==
                    missing.end())
                    missing.push_back(name);
            } else {
                out += it->second;
            }
            i = end + 1;
            continue;
        }
        out.push_back(c);
        ++i;
    }
    if (!missing.empty()) throw TemplateError(std::move(missing));
    return out;
}

std::string fingerprint(const Prompt& p, int run_index) {
    char params[64];
    std::snprintf(params, sizeof(params), "%.6g|%d|%d", p.temperature,
                  p.max_tokens, run_index);
    std::uint64_t h = fnv1a64(p.system);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(p.user, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(params, h);
    return hex64(h);
}

} // namespace am::gateway
