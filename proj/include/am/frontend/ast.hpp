#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "am/support/diagnostics.hpp"

namespace am::frontend {

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Number {
    bool sized = false;   // had an explicit width prefix
    int width = 32;       // declared width; 32 for plain decimals
    char base = 'd';      // b, o, d, h
    std::string digits;   // normalized: lowercase, underscores stripped
    std::uint64_t value = 0; // x/z/? digits treated as 0

    bool operator==(const Number&) const = default;
};

struct Expr {
    enum class Kind {
        Ident,
        Literal,
        Unary,      // op applied to operand[0]
        Binary,     // operand[0] op operand[1]
        Ternary,    // operand[0] ? operand[1] : operand[2]
        BitSelect,  // ident[operand[0]]
        PartSelect, // ident[operand[0]:operand[1]]
        Concat,     // {operands...}
        Repl        // {operand[0]{operands[1..]}}
    };

    Kind kind;
    Loc loc;
    std::string ident;  // Ident and select base; op text for Unary/Binary
    Number literal;
    std::vector<ExprPtr> operands;

    static ExprPtr make(Kind k, Loc loc) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->loc = std::move(loc);
        return e;
    }

    // Collects every identifier referenced anywhere in the tree, in order
    // of appearance, duplicates included.
    void collect_idents(std::vector<std::string>& out) const {
        if (kind == Kind::Ident || kind == Kind::BitSelect ||
            kind == Kind::PartSelect)
            out.push_back(ident);
        for (const auto& op : operands) op->collect_idents(out);
    }
};

bool expr_equal(const Expr& a, const Expr& b);

// ---------------------------------------------------------------------------
// Statements (always-block bodies)
// ---------------------------------------------------------------------------

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct CaseItem {
    std::vector<ExprPtr> labels; // empty = default
    StmtPtr body;
};

struct Stmt {
    enum class Kind { Block, If, Case, Assign, Null };

    Kind kind;
    Loc loc;

    // Block
    std::vector<StmtPtr> stmts;
    // If
    ExprPtr cond;
    StmtPtr then_branch;
    StmtPtr else_branch; // may be null
    // Case
    ExprPtr subject;
    std::vector<CaseItem> items;
    bool casez = false;
    // Assign
    ExprPtr lhs;
    ExprPtr rhs;
    bool nonblocking = false;

    static StmtPtr make(Kind k, Loc loc) {
        auto s = std::make_unique<Stmt>();
        s->kind = k;
        s->loc = std::move(loc);
        return s;
    }
};

// ---------------------------------------------------------------------------
// Module items and declarations
// ---------------------------------------------------------------------------

enum class PortDir { Input, Output, Inout };

inline const char* port_dir_name(PortDir d) {
    switch (d) {
        case PortDir::Input: return "input";
        case PortDir::Output: return "output";
        default: return "inout";
    }
}

struct Range {
    ExprPtr msb;
    ExprPtr lsb;
};

struct PortDecl {
    std::string name;
    PortDir dir = PortDir::Input;
    std::optional<Range> range;
    bool is_reg = false;
    Loc loc;
};

struct NetDecl {
    std::string name;
    bool is_reg = false;
    std::optional<Range> range;
    ExprPtr init; // wire w = expr; lowered to a continuous assign at parse
    Loc loc;
};

struct ParamDecl {
    std::string name;
    ExprPtr value;
    Loc loc;
};

struct EventControl {
    struct Item {
        enum class Edge { None, Pos, Neg } edge = Edge::None;
        std::string signal;
        Loc loc;
    };
    bool star = false;
    std::vector<Item> items;
};

struct ContAssign {
    ExprPtr lhs;
    ExprPtr rhs;
    Loc loc;
};

struct AlwaysBlock {
    EventControl event;
    StmtPtr body;
    Loc loc;
};

struct Connection {
    std::string formal; // empty while still positional
    ExprPtr actual;     // null for explicitly open `.p()`
    Loc loc;
};

struct InstanceDecl {
    std::string target_module;
    std::string instance_name;
    bool positional = false;
    std::vector<Connection> conns;
    std::vector<Connection> param_overrides; // same named/positional rules
    bool params_positional = false;
    Loc loc;
};

struct ModuleItem {
    enum class Kind { Assign, Always, Instance };
    Kind kind;
    ContAssign assign;
    AlwaysBlock always;
    InstanceDecl instance;
};

struct ModuleDecl {
    std::string name;
    std::vector<ParamDecl> params;
    std::vector<PortDecl> ports;
    std::vector<NetDecl> nets;
    std::vector<ModuleItem> items;
    Loc loc;

    const PortDecl* find_port(const std::string& n) const {
        for (const auto& p : ports)
            if (p.name == n) return &p;
        return nullptr;
    }
};

struct SourceUnit {
    std::vector<std::pair<std::string, std::string>> files; // (path, text)
    std::vector<ModuleDecl> modules;
};

bool module_equal(const ModuleDecl& a, const ModuleDecl& b);
bool unit_equal(const SourceUnit& a, const SourceUnit& b);

} // namespace am::frontend
