#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "am/frontend/ast.hpp"
#include "am/support/diagnostics.hpp"

namespace am::frontend {

struct ResolvedPort {
    std::string name;
    PortDir dir = PortDir::Input;
    int msb = 0;
    int lsb = 0;
    int width = 1;
    bool is_reg = false;
    Loc loc;
};

// One formal-port connection of an instance, rewritten to named form with
// the actual expression reduced to its referenced signals.
struct ResolvedConn {
    std::string formal;
    PortDir dir = PortDir::Input;
    bool connected = false;
    std::vector<std::string> actual_signals; // idents in the actual expr
    Loc loc;
};

struct InstNode {
    std::string path;        // dot-separated, rooted at the top instance
    std::string inst_name;
    std::string module_name;
    bool blackbox = false;
    std::vector<ResolvedConn> conns;
    std::vector<std::unique_ptr<InstNode>> children;
};

// Elaborated design. Immutable after construction.
struct DesignDB {
    SourceUnit unit; // owns the AST
    std::map<std::string, const ModuleDecl*> modules;
    std::map<std::string, std::vector<ResolvedPort>> ports; // per module
    std::map<std::string, std::map<std::string, std::int64_t>> params;
    std::string top;
    std::unique_ptr<InstNode> root;
    std::set<std::string> blackboxes;

    const ModuleDecl* find_module(const std::string& name) const {
        auto it = modules.find(name);
        return it == modules.end() ? nullptr : it->second;
    }
    const ResolvedPort* find_port(const std::string& module,
                                  const std::string& port) const {
        auto it = ports.find(module);
        if (it == ports.end()) return nullptr;
        for (const auto& p : it->second)
            if (p.name == port) return &p;
        return nullptr;
    }
    // True if `name` is a declared port, net, or parameter of `module`.
    bool signal_exists(const std::string& module,
                       const std::string& name) const;

    void for_each_instance(
        const std::function<void(const InstNode&)>& fn) const;
};

// Picks the unique module never instantiated by another. Throws ElabError
// when there is no candidate or more than one.
std::string pick_top(const SourceUnit& unit);

// Builds the design database: expands the instance tree from `top`,
// substitutes parameters, rewrites positional connections to named form,
// and records undefined modules as blackboxes (warning, not error).
// Throws ElabError on unknown top, recursive instantiation, connection
// mismatches, duplicate instance names, or unresolved identifiers.
DesignDB elaborate(SourceUnit unit, const std::string& top,
                   DiagnosticSink& diags);

// Constant-folds an expression over a parameter environment. Returns
// nullopt when the expression is not constant.
std::optional<std::int64_t> fold_const(
    const Expr& e, const std::map<std::string, std::int64_t>& env);

} // namespace am::frontend
