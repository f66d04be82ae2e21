#include "am/miner/mine.hpp"

#include <algorithm>
#include <sstream>

#include "am/miner/grammar.hpp"
#include "am/specsyn/prompt_builder.hpp"
#include "am/support/text.hpp"

namespace am::miner {

using structural::SignalChain;

gateway::Prompt compose_mining_prompt(
    const std::vector<specsyn::VerificationFeature>& features,
    const frontend::DesignDB& db, const structural::ChainSet& simplified,
    const structural::IoTable& table, const std::string& template_text,
    const specsyn::PromptBudget& budget, DiagnosticSink& diags) {
    if (features.empty())
        throw ToolError("mining prompt requires at least one feature");
    const std::string& module = table.module;

    std::ostringstream feat;
    for (const auto& f : features)
        feat << f.ordinal << ". [" << f.id << "] " << f.statement << '\n';

    // chains touching this module, droppable longest-first on overflow
    std::vector<std::string> chain_lines;
    {
        std::string block = specsyn::chains_for_module(module, db, simplified);
        if (block != "none")
            for (auto& l : split_lines(block))
                if (!trim(l).empty()) chain_lines.push_back(l);
    }
    std::vector<size_t> drop_order(chain_lines.size());
    for (size_t i = 0; i < drop_order.size(); ++i) drop_order[i] = i;
    std::stable_sort(drop_order.begin(), drop_order.end(),
                     [&](size_t a, size_t b) {
                         return chain_lines[a].size() > chain_lines[b].size();
                     });
    std::vector<bool> dropped(chain_lines.size(), false);

    auto render = [&] {
        std::string chains;
        for (size_t i = 0; i < chain_lines.size(); ++i)
            if (!dropped[i]) chains += chain_lines[i] + '\n';
        if (chains.empty()) chains = "none";
        std::map<std::string, std::string> values = {
            {"module_name", module},
            {"assertion_template", kAssertionTemplate},
            {"features", feat.str()},
            {"io_table", structural::render_io_table(table)},
            {"signal_chains", chains}};
        return std::make_pair(gateway::render_template(template_text, values),
                              values);
    };

    auto [user, values] = render();
    size_t shed = 0;
    for (size_t k = 0;
         approx_tokens(user) > budget.max_tokens && k < drop_order.size();
         ++k) {
        dropped[drop_order[k]] = true;
        ++shed;
        std::tie(user, values) = render();
    }
    if (shed > 0)
        diags.warning({}, "mining prompt for '" + module + "': dropped " +
                              std::to_string(shed) +
                              " longest signal chain(s) to fit token budget");
    if (approx_tokens(user) > budget.max_tokens)
        throw specsyn::ContextOverflow("mining prompt for '" + module +
                                       "' exceeds the token budget");

    gateway::Prompt p;
    p.system = specsyn::kSystemText;
    p.user = std::move(user);
    p.template_id = "mining_prompt";
    p.placeholders = std::move(values);
    return p;
}

namespace {

std::vector<std::string> fenced_blocks(const std::string& text) {
    std::vector<std::string> blocks;
    size_t pos = 0;
    while (true) {
        size_t open = text.find("```", pos);
        if (open == std::string::npos) break;
        size_t body = text.find('\n', open);
        if (body == std::string::npos) break;
        size_t close = text.find("```", body);
        if (close == std::string::npos) break;
        blocks.push_back(text.substr(body + 1, close - body - 1));
        pos = close + 3;
    }
    return blocks;
}

// splits a code block into `;`-terminated statements, tracking
// `// feature: <id>` comment tags
void split_statements(const std::string& code, const std::string& module,
                      std::vector<DeepAssertion>& out) {
    std::string pending_feature;
    std::string stmt;
    for (const auto& line : split_lines(code)) {
        std::string t = trim(line);
        if (t.rfind("//", 0) == 0) {
            std::string comment = trim(t.substr(2));
            if (to_lower(comment).rfind("feature:", 0) == 0)
                pending_feature = trim(comment.substr(8));
            continue;
        }
        if (t.empty()) continue;
        stmt += (stmt.empty() ? "" : " ") + t;
        if (!stmt.empty() && stmt.back() == ';') {
            DeepAssertion a;
            a.raw = stmt;
            a.module = module;
            a.feature_id = pending_feature;
            out.push_back(std::move(a));
            stmt.clear();
            pending_feature.clear();
        }
    }
    if (!trim(stmt).empty()) {
        // unterminated trailing statement still counts as a raw candidate
        DeepAssertion a;
        a.raw = stmt;
        a.module = module;
        a.feature_id = pending_feature;
        out.push_back(std::move(a));
    }
}

} // namespace

std::vector<DeepAssertion> parse_mining_completion(const std::string& text,
                                                   const std::string& module,
                                                   DiagnosticSink& diags) {
    if (trim(text).empty())
        throw MiningParseError("empty mining completion for module '" +
                               module + "'");
    std::vector<DeepAssertion> out;
    auto blocks = fenced_blocks(text);
    if (!blocks.empty()) {
        for (const auto& b : blocks) split_statements(b, module, out);
    } else {
        // fallback: scan the whole completion for assert-property lines
        for (const auto& line : split_lines(text)) {
            std::string t = trim(line);
            if (t.rfind("assert property", 0) == 0) {
                DeepAssertion a;
                a.raw = t;
                a.module = module;
                out.push_back(std::move(a));
            }
        }
    }
    if (out.empty())
        diags.warning({}, "mining completion for '" + module +
                              "' contains no assertions");
    return out;
}

std::vector<DeepAssertion> mine_assertions(const gateway::Prompt& p,
                                           gateway::Gateway& gw,
                                           const std::string& module,
                                           DiagnosticSink& diags) {
    gateway::Completion c = gw.complete(p);
    return parse_mining_completion(c.text, module, diags);
}

} // namespace am::miner
