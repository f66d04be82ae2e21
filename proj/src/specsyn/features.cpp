#include "am/specsyn/features.hpp"

#include <cctype>
#include <set>

#include "am/specsyn/prompt_builder.hpp"
#include "am/support/text.hpp"

namespace am::specsyn {

const char* feature_category_name(FeatureCategory c) {
    switch (c) {
        case FeatureCategory::Handshake: return "handshake";
        case FeatureCategory::DataIntegrity: return "data-integrity";
        case FeatureCategory::Reset: return "reset";
        case FeatureCategory::Control: return "control";
        default: return "other";
    }
}

namespace {

FeatureCategory categorize(const std::string& statement) {
    std::string s = to_lower(statement);
    auto has = [&](std::initializer_list<const char*> words) {
        for (const char* w : words)
            if (s.find(w) != std::string::npos) return true;
        return false;
    };
    if (has({"reset", "rst"})) return FeatureCategory::Reset;
    if (has({"valid", "ready", "ack", "handshake", "request", "grant"}))
        return FeatureCategory::Handshake;
    if (has({"data", "integrity", "parity", "checksum", "payload"}))
        return FeatureCategory::DataIntegrity;
    if (has({"enable", "control", "select", "mode", "state"}))
        return FeatureCategory::Control;
    return FeatureCategory::Other;
}

// numbered item: "3. text" or "3) text"
bool split_numbered(const std::string& line, std::string& body) {
    std::string t = trim(line);
    size_t i = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == 0 || i >= t.size()) return false;
    if (t[i] != '.' && t[i] != ')') return false;
    body = trim(t.substr(i + 1));
    return !body.empty();
}

// backticked tokens and dotted names are explicit signal mentions that
// must resolve; bare words count only when they match a port name
struct SignalScan {
    std::vector<std::string> referenced;
    std::vector<std::string> unknown;
};

SignalScan scan_signals(const std::string& statement,
                        const std::set<std::string>& ports) {
    SignalScan scan;
    auto note = [&](const std::string& name, bool explicit_mention) {
        if (ports.count(name)) {
            if (std::find(scan.referenced.begin(), scan.referenced.end(),
                          name) == scan.referenced.end())
                scan.referenced.push_back(name);
        } else if (explicit_mention) {
            if (std::find(scan.unknown.begin(), scan.unknown.end(), name) ==
                scan.unknown.end())
                scan.unknown.push_back(name);
        }
    };

    size_t i = 0;
    while (i < statement.size()) {
        char c = statement[i];
        if (c == '`') {
            size_t end = statement.find('`', i + 1);
            if (end == std::string::npos) break;
            std::string name = trim(statement.substr(i + 1, end - i - 1));
            // `mod.sig` counts as a mention of sig
            size_t dot = name.rfind('.');
            if (dot != std::string::npos) name = name.substr(dot + 1);
            if (!name.empty()) note(name, true);
            i = end + 1;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < statement.size() &&
                   (std::isalnum(static_cast<unsigned char>(statement[i])) ||
                    statement[i] == '_'))
                ++i;
            std::string word = statement.substr(start, i - start);
            bool dotted = i < statement.size() && statement[i] == '.' &&
                          i + 1 < statement.size() &&
                          (std::isalpha(static_cast<unsigned char>(
                               statement[i + 1])) ||
                           statement[i + 1] == '_');
            if (dotted) {
                ++i;
                size_t s2 = i;
                while (i < statement.size() &&
                       (std::isalnum(
                            static_cast<unsigned char>(statement[i])) ||
                        statement[i] == '_'))
                    ++i;
                note(statement.substr(s2, i - s2), true);
            } else {
                note(word, false);
            }
            continue;
        }
        ++i;
    }
    return scan;
}

} // namespace

gateway::Prompt compose_feature_prompt(const ModuleSpec& spec,
                                       const structural::IoTable& table,
                                       const std::string& template_text) {
    std::string port_list;
    for (const auto& row : table.rows) {
        if (!port_list.empty()) port_list += ", ";
        port_list += row.name;
    }
    std::string spec_text = spec.overview;
    if (!spec_text.empty()) spec_text += "\n";
    spec_text += spec.function_text;

    gateway::Prompt p;
    p.system = kSystemText;
    p.template_id = "features_prompt";
    p.placeholders = {{"module_name", spec.module},
                      {"module_spec", spec_text},
                      {"port_list", port_list}};
    p.user = gateway::render_template(template_text, p.placeholders);
    return p;
}

FeatureExtraction parse_feature_completion(const std::string& text,
                                           const structural::IoTable& table,
                                           const std::string& module) {
    if (trim(text).empty())
        throw FeatureParseError("empty completion for module '" + module +
                                "'");
    std::set<std::string> ports;
    for (const auto& row : table.rows) ports.insert(row.name);

    FeatureExtraction out;
    int ordinal = 0;
    bool any_numbered = false;
    for (const auto& line : split_lines(text)) {
        std::string body;
        if (!split_numbered(line, body)) continue;
        any_numbered = true;
        auto scan = scan_signals(body, ports);
        if (!scan.unknown.empty()) {
            std::string names;
            for (const auto& n : scan.unknown)
                names += (names.empty() ? "" : ", ") + n;
            out.dropped.push_back(
                {Severity::Warning,
                 "feature dropped: references unknown signal(s) " + names +
                     " (not ports of '" + module + "'): " + body,
                 {}});
            continue;
        }
        VerificationFeature f;
        f.module = module;
        f.ordinal = ++ordinal;
        f.id = module + "-" + std::to_string(f.ordinal);
        f.statement = body;
        if (!f.statement.empty() && f.statement.back() != '.')
            f.statement += '.';
        f.signals = scan.referenced;
        f.category = categorize(body);
        out.features.push_back(std::move(f));
    }
    if (!any_numbered)
        throw FeatureParseError(
            "no numbered feature items in completion for module '" + module +
            "'");
    return out;
}

FeatureExtraction extract_features(const ModuleSpec& spec,
                                   const structural::IoTable& table,
                                   gateway::Gateway& gw,
                                   const std::string& template_text) {
    gateway::Prompt p = compose_feature_prompt(spec, table, template_text);
    gateway::Completion c = gw.complete(p);
    return parse_feature_completion(c.text, table, spec.module);
}

} // namespace am::specsyn
