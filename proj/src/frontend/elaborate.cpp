#include "am/frontend/elaborate.hpp"

#include <algorithm>
#include <unordered_set>

namespace am::frontend {

std::optional<std::int64_t> fold_const(
    const Expr& e, const std::map<std::string, std::int64_t>& env) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Literal:
            return static_cast<std::int64_t>(e.literal.value);
        case K::Ident: {
            auto it = env.find(e.ident);
            if (it == env.end()) return std::nullopt;
            return it->second;
        }
        case K::Unary: {
            auto v = fold_const(*e.operands[0], env);
            if (!v) return std::nullopt;
            if (e.ident == "~") return ~*v;
            if (e.ident == "!") return *v == 0 ? 1 : 0;
            if (e.ident == "-") return -*v;
            if (e.ident == "+") return *v;
            return std::nullopt; // reduction ops are not constant-folded
        }
        case K::Binary: {
            auto a = fold_const(*e.operands[0], env);
            auto b = fold_const(*e.operands[1], env);
            if (!a || !b) return std::nullopt;
            const std::string& op = e.ident;
            if (op == "+") return *a + *b;
            if (op == "-") return *a - *b;
            if (op == "*") return *a * *b;
            if (op == "/") return *b == 0 ? std::optional<std::int64_t>()
                                          : *a / *b;
            if (op == "%") return *b == 0 ? std::optional<std::int64_t>()
                                          : *a % *b;
            if (op == "&") return *a & *b;
            if (op == "|") return *a | *b;
            if (op == "^") return *a ^ *b;
            if (op == "<<") return *a << *b;
            if (op == ">>") return *a >> *b;
            if (op == "==") return *a == *b ? 1 : 0;
            if (op == "!=") return *a != *b ? 1 : 0;
            if (op == "<") return *a < *b ? 1 : 0;
            if (op == "<=") return *a <= *b ? 1 : 0;
            if (op == ">") return *a > *b ? 1 : 0;
            if (op == ">=") return *a >= *b ? 1 : 0;
            if (op == "&&") return (*a && *b) ? 1 : 0;
            if (op == "||") return (*a || *b) ? 1 : 0;
            return std::nullopt;
        }
        case K::Ternary: {
            auto c = fold_const(*e.operands[0], env);
            if (!c) return std::nullopt;
            return fold_const(*e.operands[*c ? 1 : 2], env);
        }
        default:
            return std::nullopt;
    }
}

std::string pick_top(const SourceUnit& unit) {
    std::unordered_set<std::string> instantiated;
    for (const auto& m : unit.modules)
        for (const auto& item : m.items)
            if (item.kind == ModuleItem::Kind::Instance)
                instantiated.insert(item.instance.target_module);
    std::vector<std::string> candidates;
    for (const auto& m : unit.modules)
        if (!instantiated.count(m.name)) candidates.push_back(m.name);
    if (candidates.size() == 1) return candidates.front();
    if (candidates.empty())
        throw ElabError("no top module candidate: every module is "
                        "instantiated somewhere");
    std::string list;
    for (const auto& c : candidates) list += (list.empty() ? "" : ", ") + c;
    throw ElabError("ambiguous top module, candidates: " + list +
                    " (use an explicit top flag)");
}

namespace {

struct Elaborator {
    DesignDB& db;
    DiagnosticSink& diags;
    std::vector<std::string> expansion_stack;
    std::unordered_set<std::string> warned_blackbox;

    Elaborator(DesignDB& d, DiagnosticSink& s) : db(d), diags(s) {}

    void resolve_module(const ModuleDecl& m) {
        // parameter defaults, in declaration order
        std::map<std::string, std::int64_t> env;
        for (const auto& p : m.params) {
            auto v = fold_const(*p.value, env);
            if (!v)
                throw ElabError(p.loc, "parameter '" + p.name + "' of module '" +
                                           m.name +
                                           "' does not fold to a constant");
            env[p.name] = *v;
        }
        db.params[m.name] = env;

        std::vector<ResolvedPort> rports;
        for (const auto& p : m.ports) {
            ResolvedPort rp;
            rp.name = p.name;
            rp.dir = p.dir;
            rp.is_reg = p.is_reg;
            rp.loc = p.loc;
            if (p.range) {
                auto msb = fold_const(*p.range->msb, env);
                auto lsb = fold_const(*p.range->lsb, env);
                if (!msb || !lsb)
                    throw ElabError(p.loc, "range of port '" + p.name +
                                               "' does not fold to constants");
                if (*msb < *lsb || *lsb < 0)
                    throw ElabError(p.loc, "invalid range for port '" + p.name +
                                               "'");
                rp.msb = static_cast<int>(*msb);
                rp.lsb = static_cast<int>(*lsb);
                rp.width = rp.msb - rp.lsb + 1;
            }
            rports.push_back(std::move(rp));
        }
        db.ports[m.name] = std::move(rports);

        for (const auto& n : m.nets) {
            if (!n.range) continue;
            auto msb = fold_const(*n.range->msb, env);
            auto lsb = fold_const(*n.range->lsb, env);
            if (!msb || !lsb)
                throw ElabError(n.loc, "range of net '" + n.name +
                                           "' does not fold to constants");
        }

        check_identifiers(m, env);
    }

    // Every identifier referenced in module items must name a port, net,
    // or parameter of the module.
    void check_identifiers(const ModuleDecl& m,
                           const std::map<std::string, std::int64_t>& env) {
        std::unordered_set<std::string> declared;
        for (const auto& p : m.ports) declared.insert(p.name);
        for (const auto& n : m.nets) declared.insert(n.name);
        for (const auto& [k, v] : env) declared.insert(k);

        auto check_expr = [&](const Expr& e, auto&& self) -> void {
            if (e.kind == Expr::Kind::Ident ||
                e.kind == Expr::Kind::BitSelect ||
                e.kind == Expr::Kind::PartSelect) {
                if (!declared.count(e.ident))
                    diags.error(e.loc, "unresolved identifier '" + e.ident +
                                           "' in module '" + m.name + "'");
            }
            for (const auto& op : e.operands) self(*op, self);
        };
        auto check = [&](const Expr& e) { check_expr(e, check_expr); };

        std::function<void(const Stmt&)> check_stmt = [&](const Stmt& s) {
            switch (s.kind) {
                case Stmt::Kind::Block:
                    for (const auto& st : s.stmts) check_stmt(*st);
                    break;
                case Stmt::Kind::If:
                    check(*s.cond);
                    check_stmt(*s.then_branch);
                    if (s.else_branch) check_stmt(*s.else_branch);
                    break;
                case Stmt::Kind::Case:
                    check(*s.subject);
                    for (const auto& item : s.items) {
                        for (const auto& l : item.labels) check(*l);
                        check_stmt(*item.body);
                    }
                    break;
                case Stmt::Kind::Assign:
                    check(*s.lhs);
                    check(*s.rhs);
                    break;
                case Stmt::Kind::Null:
                    break;
            }
        };

        for (const auto& item : m.items) {
            switch (item.kind) {
                case ModuleItem::Kind::Assign:
                    check(*item.assign.lhs);
                    check(*item.assign.rhs);
                    break;
                case ModuleItem::Kind::Always:
                    for (const auto& ev : item.always.event.items)
                        if (!declared.count(ev.signal))
                            diags.error(ev.loc, "unresolved identifier '" +
                                                    ev.signal + "' in module '" +
                                                    m.name + "'");
                    check_stmt(*item.always.body);
                    break;
                case ModuleItem::Kind::Instance:
                    for (const auto& c : item.instance.conns)
                        if (c.actual) check(*c.actual);
                    for (const auto& c : item.instance.param_overrides)
                        check(*c.actual);
                    break;
            }
        }
    }

    std::unique_ptr<InstNode> expand(const std::string& path,
                                     const std::string& inst_name,
                                     const std::string& module_name,
                                     const Loc& loc) {
        auto node = std::make_unique<InstNode>();
        node->path = path;
        node->inst_name = inst_name;
        node->module_name = module_name;

        const ModuleDecl* m = db.find_module(module_name);
        if (!m) {
            node->blackbox = true;
            db.blackboxes.insert(module_name);
            if (warned_blackbox.insert(module_name).second)
                diags.warning(loc, "module '" + module_name +
                                       "' is not defined; treating as "
                                       "external blackbox");
            return node;
        }

        if (std::find(expansion_stack.begin(), expansion_stack.end(),
                      module_name) != expansion_stack.end())
            throw ElabError(loc,
                            "recursive instantiation of module '" +
                                module_name + "'");
        expansion_stack.push_back(module_name);

        std::unordered_set<std::string> inst_names;
        for (const auto& item : m->items) {
            if (item.kind != ModuleItem::Kind::Instance) continue;
            const InstanceDecl& inst = item.instance;
            if (!inst_names.insert(inst.instance_name).second)
                throw ElabError(inst.loc, "duplicate instance name '" +
                                              inst.instance_name +
                                              "' in module '" + m->name + "'");
            auto child = expand(path + "." + inst.instance_name,
                                inst.instance_name, inst.target_module,
                                inst.loc);
            resolve_connections(*m, inst, *child);
            node->children.push_back(std::move(child));
        }

        expansion_stack.pop_back();
        return node;
    }

    void resolve_connections(const ModuleDecl& parent,
                             const InstanceDecl& inst, InstNode& child) {
        // parameter overrides must fold in the parent's environment
        const auto& parent_env = db.params[parent.name];
        const ModuleDecl* target = db.find_module(inst.target_module);
        for (size_t i = 0; i < inst.param_overrides.size(); ++i) {
            const Connection& c = inst.param_overrides[i];
            auto v = fold_const(*c.actual, parent_env);
            if (!v)
                throw ElabError(c.loc,
                                "parameter override does not fold to a "
                                "constant");
            if (target) {
                if (inst.params_positional) {
                    if (i >= target->params.size())
                        throw ElabError(c.loc,
                                        "too many parameter overrides for "
                                        "module '" + inst.target_module + "'");
                } else {
                    bool found = false;
                    for (const auto& p : target->params)
                        if (p.name == c.formal) found = true;
                    if (!found)
                        throw ElabError(c.loc, "override of nonexistent "
                                                   "parameter '" + c.formal +
                                                   "'");
                }
            }
        }

        if (child.blackbox) {
            // formal names unknown for positional blackbox connections
            for (size_t i = 0; i < inst.conns.size(); ++i) {
                const Connection& c = inst.conns[i];
                ResolvedConn rc;
                rc.formal = inst.positional ? "$" + std::to_string(i + 1)
                                            : c.formal;
                rc.connected = c.actual != nullptr;
                rc.loc = c.loc;
                if (c.actual) c.actual->collect_idents(rc.actual_signals);
                dedup(rc.actual_signals);
                child.conns.push_back(std::move(rc));
            }
            return;
        }

        const auto& formal_ports = db.ports[child.module_name];
        std::map<std::string, const Connection*> by_formal;
        if (inst.positional) {
            if (inst.conns.size() != formal_ports.size())
                throw ElabError(inst.loc,
                                "port-count mismatch in positional "
                                "connection: module '" + child.module_name +
                                    "' has " +
                                    std::to_string(formal_ports.size()) +
                                    " ports, got " +
                                    std::to_string(inst.conns.size()));
            for (size_t i = 0; i < inst.conns.size(); ++i)
                by_formal[formal_ports[i].name] = &inst.conns[i];
        } else {
            for (const auto& c : inst.conns) {
                bool exists = false;
                for (const auto& p : formal_ports)
                    if (p.name == c.formal) exists = true;
                if (!exists)
                    throw ElabError(c.loc,
                                    "named connection to nonexistent port '" +
                                        c.formal + "' of module '" +
                                        child.module_name + "'");
                if (by_formal.count(c.formal))
                    throw ElabError(c.loc, "port '" + c.formal +
                                               "' connected twice");
                by_formal[c.formal] = &c;
            }
        }

        for (const auto& p : formal_ports) {
            ResolvedConn rc;
            rc.formal = p.name;
            rc.dir = p.dir;
            auto it = by_formal.find(p.name);
            if (it != by_formal.end() && it->second->actual) {
                rc.connected = true;
                rc.loc = it->second->loc;
                it->second->actual->collect_idents(rc.actual_signals);
                dedup(rc.actual_signals);
            } else {
                rc.loc = it != by_formal.end() ? it->second->loc : inst.loc;
            }
            child.conns.push_back(std::move(rc));
        }
    }

    static void dedup(std::vector<std::string>& v) {
        std::vector<std::string> out;
        for (auto& s : v)
            if (std::find(out.begin(), out.end(), s) == out.end())
                out.push_back(std::move(s));
        v = std::move(out);
    }
};

void walk(const InstNode& n, const std::function<void(const InstNode&)>& fn) {
    fn(n);
    for (const auto& c : n.children) walk(*c, fn);
}

} // namespace

bool DesignDB::signal_exists(const std::string& module,
                             const std::string& name) const {
    const ModuleDecl* m = find_module(module);
    if (!m) return false;
    if (m->find_port(name)) return true;
    for (const auto& n : m->nets)
        if (n.name == name) return true;
    auto it = params.find(module);
    if (it != params.end() && it->second.count(name)) return true;
    return false;
}

void DesignDB::for_each_instance(
    const std::function<void(const InstNode&)>& fn) const {
    if (root) walk(*root, fn);
}

DesignDB elaborate(SourceUnit unit, const std::string& top,
                   DiagnosticSink& diags) {
    DesignDB db;
    db.unit = std::move(unit);
    for (const auto& m : db.unit.modules) db.modules[m.name] = &m;

    const ModuleDecl* top_decl = db.find_module(top);
    if (!top_decl) throw ElabError("unknown top module '" + top + "'");
    db.top = top;

    Elaborator el(db, diags);
    for (const auto& m : db.unit.modules) el.resolve_module(m);

    size_t errors_before = 0;
    for (const auto& d : diags.all())
        if (d.severity == Severity::Error) ++errors_before;
    if (errors_before > 0)
        throw ElabError("elaboration failed: " +
                        std::to_string(errors_before) +
                        " unresolved reference(s); see diagnostics");

    db.root = el.expand(top, top, top, top_decl->loc);
    return db;
}

} // namespace am::frontend
