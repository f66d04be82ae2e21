#include "am/structural/dataflow.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace am::structural {

using frontend::DesignDB;
using frontend::Expr;
using frontend::InstNode;
using frontend::ModuleDecl;
using frontend::ModuleItem;
using frontend::PortDir;
using frontend::Stmt;

const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Continuous: return "continuous";
        case EdgeKind::Blocking: return "blocking";
        case EdgeKind::Nonblocking: return "nonblocking";
        case EdgeKind::Port: return "port";
        default: return "control";
    }
}

namespace {

struct Builder {
    const DesignDB& db;
    DiagnosticSink& diags;
    DataflowGraph g;

    Builder(const DesignDB& d, DiagnosticSink& s) : db(d), diags(s) {}

    // declared ports+nets per module (parameters excluded)
    std::unordered_map<std::string, std::unordered_set<std::string>> sigs_;

    const std::unordered_set<std::string>& signals_of(const ModuleDecl& m) {
        auto it = sigs_.find(m.name);
        if (it != sigs_.end()) return it->second;
        std::unordered_set<std::string> s;
        for (const auto& p : m.ports) s.insert(p.name);
        for (const auto& n : m.nets) s.insert(n.name);
        return sigs_.emplace(m.name, std::move(s)).first->second;
    }

    void add_edge(const std::string& src, const std::string& dst, EdgeKind k,
                  const Loc& loc) {
        if (src == dst && k == EdgeKind::Continuous) {
            diags.warning(loc, "combinational self-loop on " + src);
            return;
        }
        g.edges.push_back({src, dst, k, loc});
    }

    static void lhs_targets(const Expr& e, std::vector<std::string>& out) {
        if (e.kind == Expr::Kind::Ident || e.kind == Expr::Kind::BitSelect ||
            e.kind == Expr::Kind::PartSelect) {
            out.push_back(e.ident);
            return;
        }
        // concat LHS
        for (const auto& op : e.operands) lhs_targets(*op, out);
    }

    std::vector<std::string> rhs_signals(const Expr& e, const ModuleDecl& m) {
        std::vector<std::string> idents;
        e.collect_idents(idents);
        const auto& declared = signals_of(m);
        std::vector<std::string> out;
        for (auto& id : idents)
            if (declared.count(id) &&
                std::find(out.begin(), out.end(), id) == out.end())
                out.push_back(std::move(id));
        return out;
    }

    void visit_instance(const InstNode& node) {
        const ModuleDecl* m = db.find_module(node.module_name);
        if (m) {
            for (const auto& s : signals_of(*m))
                g.nodes.insert(node.path + "." + s);
            for (const auto& item : m->items) build_item(node.path, *m, item);
        }
        for (const auto& child : node.children) {
            build_port_edges(node, *child);
            visit_instance(*child);
        }
    }

    void build_item(const std::string& path, const ModuleDecl& m,
                    const ModuleItem& item) {
        if (item.kind == ModuleItem::Kind::Assign) {
            emit_assignment(path, m, *item.assign.lhs, *item.assign.rhs,
                            EdgeKind::Continuous, {}, item.assign.loc);
        } else if (item.kind == ModuleItem::Kind::Always) {
            std::vector<std::string> conds;
            build_stmt(path, m, *item.always.body, conds);
        }
    }

    void build_stmt(const std::string& path, const ModuleDecl& m,
                    const Stmt& s, std::vector<std::string>& conds) {
        switch (s.kind) {
            case Stmt::Kind::Block:
                for (const auto& st : s.stmts) build_stmt(path, m, *st, conds);
                break;
            case Stmt::Kind::If: {
                auto cs = rhs_signals(*s.cond, m);
                size_t n = cs.size();
                for (auto& c : cs) conds.push_back(std::move(c));
                build_stmt(path, m, *s.then_branch, conds);
                if (s.else_branch) build_stmt(path, m, *s.else_branch, conds);
                conds.resize(conds.size() - n);
                break;
            }
            case Stmt::Kind::Case: {
                auto cs = rhs_signals(*s.subject, m);
                for (const auto& item : s.items)
                    for (const auto& l : item.labels)
                        for (auto& sig : rhs_signals(*l, m))
                            cs.push_back(std::move(sig));
                // dedupe while keeping order
                std::vector<std::string> uniq;
                for (auto& c : cs)
                    if (std::find(uniq.begin(), uniq.end(), c) == uniq.end())
                        uniq.push_back(std::move(c));
                size_t n = uniq.size();
                for (auto& c : uniq) conds.push_back(std::move(c));
                for (const auto& item : s.items)
                    build_stmt(path, m, *item.body, conds);
                conds.resize(conds.size() - n);
                break;
            }
            case Stmt::Kind::Assign:
                emit_assignment(path, m, *s.lhs, *s.rhs,
                                s.nonblocking ? EdgeKind::Nonblocking
                                              : EdgeKind::Blocking,
                                conds, s.loc);
                break;
            case Stmt::Kind::Null:
                break;
        }
    }

    void emit_assignment(const std::string& path, const ModuleDecl& m,
                         const Expr& lhs, const Expr& rhs, EdgeKind kind,
                         const std::vector<std::string>& conds,
                         const Loc& loc) {
        std::vector<std::string> targets;
        lhs_targets(lhs, targets);
        auto sources = rhs_signals(rhs, m);
        // index exprs of an LHS select are data dependencies too
        if (lhs.kind == Expr::Kind::BitSelect ||
            lhs.kind == Expr::Kind::PartSelect)
            for (const auto& op : lhs.operands)
                for (auto& sig : rhs_signals(*op, m))
                    if (std::find(sources.begin(), sources.end(), sig) ==
                        sources.end())
                        sources.push_back(std::move(sig));

        for (const auto& t : targets) {
            std::string dst = path + "." + t;
            for (const auto& s : sources)
                add_edge(path + "." + s, dst, kind, loc);
            std::unordered_set<std::string> seen;
            for (const auto& c : conds) {
                if (!seen.insert(c).second) continue;
                add_edge(path + "." + c, dst, EdgeKind::Control, loc);
            }
        }
    }

    void build_port_edges(const InstNode& parent, const InstNode& child) {
        if (child.blackbox) return;
        for (const auto& rc : child.conns) {
            if (!rc.connected) continue;
            std::string formal = child.path + "." + rc.formal;
            for (const auto& sig : rc.actual_signals) {
                // parameters in actual expressions are constants, not signals
                const ModuleDecl* pm = db.find_module(parent.module_name);
                if (pm && !signals_of(*pm).count(sig)) continue;
                std::string actual = parent.path + "." + sig;
                if (rc.dir == PortDir::Input || rc.dir == PortDir::Inout)
                    add_edge(actual, formal, EdgeKind::Port, rc.loc);
                if (rc.dir == PortDir::Output || rc.dir == PortDir::Inout)
                    add_edge(formal, actual, EdgeKind::Port, rc.loc);
            }
        }
    }

    // A cycle whose edges are all combinational (no nonblocking hop) can
    // never settle; report it.
    void detect_combinational_loops() {
        std::unordered_map<std::string, std::vector<std::string>> adj;
        for (const auto& e : g.edges)
            if (e.kind != EdgeKind::Nonblocking) adj[e.src].push_back(e.dst);

        // iterative Tarjan
        std::unordered_map<std::string, int> index, low;
        std::unordered_map<std::string, bool> on_stack;
        std::vector<std::string> stack;
        int counter = 0;

        std::function<void(const std::string&)> strongconnect =
            [&](const std::string& v) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
                for (const auto& w : adj[v]) {
                    if (!index.count(w)) {
                        strongconnect(w);
                        low[v] = std::min(low[v], low[w]);
                    } else if (on_stack[w]) {
                        low[v] = std::min(low[v], index[w]);
                    }
                }
                if (low[v] == index[v]) {
                    std::vector<std::string> scc;
                    while (true) {
                        std::string w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc.push_back(w);
                        if (w == v) break;
                    }
                    bool self_loop = false;
                    for (const auto& w : adj[v])
                        if (w == v && scc.size() == 1) self_loop = true;
                    if (scc.size() > 1 || self_loop) {
                        std::sort(scc.begin(), scc.end());
                        std::string names;
                        for (const auto& n : scc)
                            names += (names.empty() ? "" : ", ") + n;
                        diags.warning({}, "combinational loop: " + names);
                    }
                }
            };

        std::vector<std::string> nodes(g.nodes.begin(), g.nodes.end());
        for (const auto& n : nodes)
            if (!index.count(n)) strongconnect(n);
    }
};

} // namespace

std::vector<std::string> DataflowGraph::predecessors(
    const std::string& node, bool include_control) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e.dst != node) continue;
        if (!include_control && e.kind == EdgeKind::Control) continue;
        if (std::find(out.begin(), out.end(), e.src) == out.end())
            out.push_back(e.src);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool DataflowGraph::has_edge(const std::string& src,
                             const std::string& dst) const {
    for (const auto& e : edges)
        if (e.src == src && e.dst == dst) return true;
    return false;
}

DataflowGraph build_dataflow(const DesignDB& db, DiagnosticSink& diags) {
    Builder b(db, diags);
    if (db.root) b.visit_instance(*db.root);
    std::sort(b.g.edges.begin(), b.g.edges.end(),
              [](const DataflowEdge& a, const DataflowEdge& e) {
                  return std::tie(a.src, a.dst, a.kind, a.loc.file, a.loc.line,
                                  a.loc.col) <
                         std::tie(e.src, e.dst, e.kind, e.loc.file, e.loc.line,
                                  e.loc.col);
              });
    b.detect_combinational_loops();
    return std::move(b.g);
}

} // namespace am::structural
