#include "am/specsyn/prompt_builder.hpp"

#include <algorithm>
#include <sstream>

#include "am/support/text.hpp"

namespace am::specsyn {

using structural::ChainSet;
using structural::SignalChain;

std::string mcg_neighborhood(const std::string& module,
                             const structural::ModuleCallGraph& mcg) {
    std::vector<std::string> parents, children;
    for (const auto& e : mcg.edges) {
        if (e.child == module &&
            std::find(parents.begin(), parents.end(), e.parent) ==
                parents.end())
            parents.push_back(e.parent);
        if (e.parent == module &&
            std::find(children.begin(), children.end(), e.child) ==
                children.end())
            children.push_back(e.child);
    }
    std::sort(parents.begin(), parents.end());
    std::sort(children.begin(), children.end());
    std::ostringstream os;
    os << "instantiated by: ";
    if (parents.empty()) {
        os << "(none, top-level)";
    } else {
        for (size_t i = 0; i < parents.size(); ++i)
            os << (i ? ", " : "") << parents[i];
    }
    os << "\ninstantiates: ";
    if (children.empty()) {
        os << "(none)";
    } else {
        for (size_t i = 0; i < children.size(); ++i)
            os << (i ? ", " : "") << children[i];
    }
    return os.str();
}

namespace {

// module of the instance at `path`, empty when unknown
std::string module_at(const frontend::DesignDB& db, const std::string& path) {
    std::string found;
    db.for_each_instance([&](const frontend::InstNode& n) {
        if (n.path == path) found = n.module_name;
    });
    return found;
}

std::vector<const SignalChain*> select_chains(const std::string& module,
                                              const frontend::DesignDB& db,
                                              const ChainSet& chains) {
    std::vector<const SignalChain*> out;
    for (const auto& po : chains.outputs) {
        for (const auto& c : po.chains) {
            bool touches = false;
            for (const auto& node : c.signals) {
                size_t dot = node.rfind('.');
                if (dot == std::string::npos) continue;
                if (module_at(db, node.substr(0, dot)) == module) {
                    touches = true;
                    break;
                }
            }
            if (touches) out.push_back(&c);
        }
    }
    return out;
}

std::string render_chain_block(const std::vector<const SignalChain*>& chains) {
    if (chains.empty()) return "none";
    std::string out;
    for (const auto* c : chains) {
        if (!out.empty()) out += '\n';
        out += structural::render_chain(*c);
    }
    return out;
}

} // namespace

std::string chains_for_module(const std::string& module,
                              const frontend::DesignDB& db,
                              const ChainSet& simplified_chains) {
    return render_chain_block(select_chains(module, db, simplified_chains));
}

gateway::Prompt compose_spec_prompt(
    const std::string& module, const frontend::DesignDB& db,
    const structural::ModuleCallGraph& mcg, const structural::IoTable& table,
    const ChainSet& simplified_chains, const std::string& design_spec,
    const std::string& template_text, const PromptBudget& budget,
    DiagnosticSink& diags) {
    auto chains = select_chains(module, db, simplified_chains);
    // deterministic drop order: longest first, ties by content
    std::vector<const SignalChain*> by_len = chains;
    std::stable_sort(by_len.begin(), by_len.end(),
                     [](const SignalChain* a, const SignalChain* b) {
                         return a->signals.size() > b->signals.size();
                     });

    std::string spec_excerpt = design_spec;
    auto render = [&](const std::vector<const SignalChain*>& cs) {
        std::map<std::string, std::string> values = {
            {"design_spec", spec_excerpt},
            {"module_name", module},
            {"io_table", structural::render_io_table(table)},
            {"mcg_context", mcg_neighborhood(module, mcg)},
            {"signal_chains", render_chain_block(cs)}};
        return std::make_pair(gateway::render_template(template_text, values),
                              values);
    };

    auto [user, values] = render(chains);
    size_t dropped = 0;
    while (approx_tokens(user) > budget.max_tokens && !by_len.empty()) {
        const SignalChain* victim = by_len.front();
        by_len.erase(by_len.begin());
        chains.erase(std::find(chains.begin(), chains.end(), victim));
        ++dropped;
        std::tie(user, values) = render(chains);
    }
    if (dropped > 0)
        diags.warning({}, "spec prompt for '" + module + "': dropped " +
                              std::to_string(dropped) +
                              " longest signal chain(s) to fit token budget");

    while (approx_tokens(user) > budget.max_tokens && !spec_excerpt.empty()) {
        spec_excerpt = spec_excerpt.substr(0, spec_excerpt.size() / 2);
        std::tie(user, values) = render(chains);
        diags.warning({}, "spec prompt for '" + module +
                              "': design-spec excerpt truncated to " +
                              std::to_string(spec_excerpt.size()) + " chars");
    }
    if (approx_tokens(user) > budget.max_tokens)
        throw ContextOverflow("spec prompt for '" + module +
                              "' exceeds the token budget even with all "
                              "reducible content removed");

    gateway::Prompt p;
    p.system = kSystemText;
    p.user = std::move(user);
    p.template_id = "spec_prompt";
    p.placeholders = std::move(values);
    return p;
}

} // namespace am::specsyn
