#include "am/structural/chains.hpp"

#include <algorithm>
#include <sstream>

namespace am::structural {

using frontend::DesignDB;
using frontend::InstNode;
using frontend::PortDir;

namespace {

// node = "<instance path>.<signal>"; the signal is the last segment
std::pair<std::string, std::string> split_node(const std::string& node) {
    size_t dot = node.rfind('.');
    if (dot == std::string::npos) return {"", node};
    return {node.substr(0, dot), node.substr(dot + 1)};
}

struct Tracer {
    const DataflowGraph& g;
    const ChainLimits& limits;
    ChainSet::PerOutput* out = nullptr;
    std::vector<std::string> path; // sink-first, reversed at emission

    Tracer(const DataflowGraph& gr, const ChainLimits& lim)
        : g(gr), limits(lim) {}

    bool full() const {
        return static_cast<int>(out->chains.size()) >=
               limits.max_chains_per_output;
    }

    void emit(bool truncated_by_len) {
        if (full()) {
            out->truncated = true;
            return;
        }
        SignalChain c;
        c.sink = out->output;
        c.signals.assign(path.rbegin(), path.rend());
        c.kind = ChainKind::Full;
        out->chains.push_back(std::move(c));
        if (truncated_by_len) out->truncated = true;
    }

    void visit(const std::string& node) {
        if (full()) {
            out->truncated = true;
            return;
        }
        path.push_back(node);
        auto preds = g.predecessors(node, limits.include_control);
        std::vector<std::string> cands;
        for (auto& p : preds)
            if (std::find(path.begin(), path.end(), p) == path.end())
                cands.push_back(std::move(p));
        if (cands.empty()) {
            emit(false);
        } else if (static_cast<int>(path.size()) >= limits.max_chain_len) {
            emit(true);
        } else {
            for (const auto& p : cands) {
                if (full()) {
                    out->truncated = true;
                    break;
                }
                visit(p);
            }
        }
        path.pop_back();
    }
};

} // namespace

std::vector<SignalChain> ChainSet::flatten() const {
    std::vector<SignalChain> all;
    for (const auto& po : outputs)
        for (const auto& c : po.chains) all.push_back(c);
    return all;
}

bool is_port_node(const DesignDB& db, const std::string& node) {
    auto [path, sig] = split_node(node);
    if (path.empty()) return false;
    std::string module;
    db.for_each_instance([&](const InstNode& n) {
        if (n.path == path) module = n.module_name;
    });
    if (module.empty()) return false;
    return db.find_port(module, sig) != nullptr;
}

ChainSet extract_signal_chains(const DataflowGraph& g, const DesignDB& db,
                               const ChainLimits& limits) {
    std::vector<std::string> sinks;
    db.for_each_instance([&](const InstNode& n) {
        if (n.blackbox) return;
        bool is_top = db.root && n.path == db.root->path;
        for (const auto& p : db.ports.at(n.module_name)) {
            if (p.dir != PortDir::Output) continue;
            // top-level outputs and instance output ports are both sinks;
            // for the root instance they coincide
            sinks.push_back(n.path + "." + p.name);
        }
        (void)is_top;
    });
    std::sort(sinks.begin(), sinks.end());
    sinks.erase(std::unique(sinks.begin(), sinks.end()), sinks.end());

    ChainSet set;
    set.limits = limits;
    for (const auto& sink : sinks) {
        ChainSet::PerOutput po;
        po.output = sink;
        Tracer tr(g, limits);
        tr.out = &po;
        tr.visit(sink);
        set.outputs.push_back(std::move(po));
    }
    return set;
}

ChainSet simplify_chains(const ChainSet& full, const DesignDB& db) {
    ChainSet out;
    out.limits = full.limits;
    for (const auto& po : full.outputs) {
        ChainSet::PerOutput spo;
        spo.output = po.output;
        spo.truncated = po.truncated;
        std::vector<std::vector<std::string>> seen;
        for (const auto& c : po.chains) {
            SignalChain s;
            s.sink = c.sink;
            s.kind = ChainKind::Simplified;
            for (const auto& node : c.signals)
                if (is_port_node(db, node)) s.signals.push_back(node);
            if (s.signals.empty()) continue;
            if (std::find(seen.begin(), seen.end(), s.signals) != seen.end())
                continue;
            seen.push_back(s.signals);
            spo.chains.push_back(std::move(s));
        }
        out.outputs.push_back(std::move(spo));
    }
    return out;
}

std::string render_chain(const SignalChain& c) {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : c.signals) {
        if (!first) os << " -> ";
        first = false;
        os << s;
    }
    return os.str();
}

} // namespace am::structural
