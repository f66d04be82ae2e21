#include "am/miner/resolve.hpp"

#include <algorithm>

namespace am::miner {

namespace {

struct ScopeMatch {
    bool ok = false;
    std::string module; // defining module of the matched scope
    std::string display; // hierarchical form used in resolved_refs
    std::string error;
};

ScopeMatch match_scope(const std::string& scope,
                       const frontend::DesignDB& db) {
    ScopeMatch m;
    if (db.modules.count(scope)) {
        m.ok = true;
        m.module = scope;
        m.display = scope;
        return m;
    }
    // fall back to a unique instance-name suffix
    std::vector<const frontend::InstNode*> hits;
    db.for_each_instance([&](const frontend::InstNode& n) {
        if (n.inst_name == scope) hits.push_back(&n);
    });
    if (hits.size() == 1) {
        m.ok = true;
        m.module = hits[0]->module_name;
        m.display = hits[0]->path;
        return m;
    }
    if (hits.empty()) {
        m.error = "unknown module or instance '" + scope + "'";
    } else {
        std::string cands;
        for (const auto* h : hits)
            cands += (cands.empty() ? "" : ", ") + h->path;
        m.error = "ambiguous instance name '" + scope +
                  "'; candidates: " + cands;
    }
    return m;
}

bool resolve_ref(const SigRef& ref, const frontend::DesignDB& db,
                 const std::map<std::string, structural::IoTable>& tables,
                 DeepAssertion& a) {
    ScopeMatch m = match_scope(ref.scope, db);
    if (!m.ok) {
        a.diagnostics.push_back({Severity::Error,
                                 m.error + " in '" + ref.scope + "." +
                                     ref.signal + "'",
                                 {}});
        return false;
    }
    auto it = tables.find(m.module);
    bool is_port = false;
    if (it != tables.end())
        is_port = std::any_of(it->second.rows.begin(), it->second.rows.end(),
                              [&](const structural::IoRow& r) {
                                  return r.name == ref.signal;
                              });
    if (!is_port) {
        a.diagnostics.push_back({Severity::Error,
                                 "non-port signal '" + ref.signal +
                                     "' of module '" + m.module + "' in '" +
                                     ref.scope + "." + ref.signal + "'",
                                 {}});
        return false;
    }
    a.resolved_refs.push_back(m.display + "." + ref.signal);
    return true;
}

} // namespace

DeepAssertion resolve_signals(
    DeepAssertion a, const frontend::DesignDB& db,
    const std::map<std::string, structural::IoTable>& tables) {
    if (a.status != AssertStatus::SyntaxOk) return a;
    a.resolved_refs.clear();
    bool ok = true;

    if (a.clock.scope.empty()) {
        // bare clock names are accepted only as top-level ports
        if (db.find_port(db.top, a.clock.signal)) {
            a.resolved_refs.push_back(db.top + "." + a.clock.signal);
        } else {
            a.diagnostics.push_back(
                {Severity::Error,
                 "clock '" + a.clock.signal +
                     "' is not a top-level port and carries no module scope",
                 {}});
            ok = false;
        }
    } else {
        ok = resolve_ref(a.clock, db, tables, a) && ok;
    }

    std::vector<const SigRef*> refs;
    a.antecedent.collect_sigrefs(refs);
    a.consequent.collect_sigrefs(refs);
    for (const auto* r : refs) ok = resolve_ref(*r, db, tables, a) && ok;

    if (ok) {
        std::sort(a.resolved_refs.begin(), a.resolved_refs.end());
        a.resolved_refs.erase(
            std::unique(a.resolved_refs.begin(), a.resolved_refs.end()),
            a.resolved_refs.end());
        a.status = AssertStatus::Resolved;
    } else {
        a.resolved_refs.clear();
    }
    return a;
}

} // namespace am::miner
