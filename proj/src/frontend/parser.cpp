#include "am/frontend/parser.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace am::frontend {

namespace {

const std::unordered_set<std::string>& unsupported_keywords() {
    static const std::unordered_set<std::string> u = {
        "generate", "endgenerate", "genvar", "function", "endfunction",
        "task", "endtask", "specify", "endspecify", "primitive",
        "endprimitive", "integer", "real", "for", "while", "repeat",
        "forever", "fork", "join", "defparam", "event", "time", "casex",
        "signed"};
    return u;
}

struct Parser {
    const std::vector<Token>& toks;
    SourceUnit& unit;
    DiagnosticSink& diags;
    size_t pos = 0;

    Parser(const std::vector<Token>& t, SourceUnit& u, DiagnosticSink& d)
        : toks(t), unit(u), diags(d) {}

    const Token& peek(size_t off = 0) const {
        size_t i = pos + off;
        return i < toks.size() ? toks[i] : toks.back();
    }
    const Token& advance() {
        const Token& t = peek();
        if (pos + 1 < toks.size()) ++pos;
        return t;
    }
    bool at_end() const { return peek().kind == TokKind::Eof; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == TokKind::Eof ? "end of input"
                                                 : "'" + t.text + "'";
        throw ParseError(t.loc, "expected " + expected + ", got " + got);
    }

    void check_unsupported() const {
        const Token& t = peek();
        if (t.kind == TokKind::Keyword && unsupported_keywords().count(t.text))
            throw ParseError(t.loc, "unsupported construct: " + t.text);
    }

    void expect_punct(std::string_view p) {
        if (!peek().is_punct(p)) fail("'" + std::string(p) + "'");
        advance();
    }
    bool accept_punct(std::string_view p) {
        if (peek().is_punct(p)) {
            advance();
            return true;
        }
        return false;
    }
    void expect_kw(std::string_view kw) {
        if (!peek().is_kw(kw)) fail("'" + std::string(kw) + "'");
        advance();
    }
    bool accept_kw(std::string_view kw) {
        if (peek().is_kw(kw)) {
            advance();
            return true;
        }
        return false;
    }
    std::string expect_ident() {
        check_unsupported();
        if (peek().kind != TokKind::Identifier) fail("identifier");
        return advance().text;
    }

    // -- Top level ----------------------------------------------------------

    void run() {
        while (!at_end()) {
            check_unsupported();
            if (!peek().is_kw("module")) fail("'module'");
            unit.modules.push_back(parse_module());
        }
    }

    ModuleDecl parse_module() {
        ModuleDecl m;
        m.loc = peek().loc;
        expect_kw("module");
        m.name = expect_ident();

        if (accept_punct("#")) parse_module_params(m);

        bool ansi_header = false;
        if (accept_punct("(")) {
            if (!peek().is_punct(")")) parse_port_list(m, ansi_header);
            expect_punct(")");
        }
        expect_punct(";");

        std::unordered_set<std::string> header_names;
        for (const auto& p : m.ports) header_names.insert(p.name);

        while (!peek().is_kw("endmodule")) {
            if (at_end()) fail("'endmodule'");
            parse_module_body_item(m, ansi_header, header_names);
        }
        expect_kw("endmodule");

        for (const auto& p : m.ports)
            if (!ansi_header && !port_has_dir_.count(p.name))
                throw ParseError(p.loc, "port '" + p.name +
                                            "' has no direction declaration");
        port_has_dir_.clear();
        return m;
    }

    void parse_module_params(ModuleDecl& m) {
        expect_punct("(");
        do {
            if (!accept_kw("parameter")) accept_kw("localparam");
            ParamDecl p;
            p.loc = peek().loc;
            p.name = expect_ident();
            expect_punct("=");
            p.value = parse_expr();
            m.params.push_back(std::move(p));
        } while (accept_punct(","));
        expect_punct(")");
    }

    void parse_port_list(ModuleDecl& m, bool& ansi_header) {
        PortDir last_dir = PortDir::Input;
        std::optional<Range> last_range;
        bool last_is_reg = false;
        bool first = true;
        do {
            const Token& t = peek();
            bool has_dir = t.is_kw("input") || t.is_kw("output") ||
                           t.is_kw("inout");
            if (first) ansi_header = has_dir;
            first = false;
            if (ansi_header) {
                PortDecl p;
                p.loc = peek().loc;
                if (has_dir) {
                    last_dir = parse_dir();
                    last_is_reg = accept_kw("reg");
                    if (!last_is_reg) accept_kw("wire");
                    last_range = parse_opt_range_shared();
                }
                p.dir = last_dir;
                p.is_reg = last_is_reg;
                p.range = clone_range(last_range);
                p.name = expect_ident();
                ensure_unique_port(m, p.name, p.loc);
                m.ports.push_back(std::move(p));
                port_has_dir_.insert(m.ports.back().name);
            } else {
                PortDecl p;
                p.loc = peek().loc;
                p.name = expect_ident();
                ensure_unique_port(m, p.name, p.loc);
                m.ports.push_back(std::move(p));
            }
        } while (accept_punct(","));
    }

    PortDir parse_dir() {
        if (accept_kw("input")) return PortDir::Input;
        if (accept_kw("output")) return PortDir::Output;
        expect_kw("inout");
        return PortDir::Inout;
    }

    void ensure_unique_port(const ModuleDecl& m, const std::string& name,
                            const Loc& loc) {
        if (m.find_port(name))
            throw ParseError(loc, "duplicate port '" + name + "'");
    }

    // Body items: declarations, assigns, always, initial, instances.
    void parse_module_body_item(ModuleDecl& m, bool ansi_header,
                                std::unordered_set<std::string>& header_names) {
        const Token& t = peek();
        check_unsupported();

        if (t.is_kw("parameter") || t.is_kw("localparam")) {
            advance();
            do {
                ParamDecl p;
                p.loc = peek().loc;
                p.name = expect_ident();
                expect_punct("=");
                p.value = parse_expr();
                m.params.push_back(std::move(p));
            } while (accept_punct(","));
            expect_punct(";");
            return;
        }
        if (t.is_kw("input") || t.is_kw("output") || t.is_kw("inout")) {
            Loc loc = t.loc;
            PortDir dir = parse_dir();
            bool is_reg = accept_kw("reg");
            if (!is_reg) accept_kw("wire");
            std::optional<Range> range = parse_opt_range_shared();
            do {
                Loc nloc = peek().loc;
                std::string name = expect_ident();
                if (ansi_header)
                    throw ParseError(nloc,
                                     "port '" + name +
                                         "' redeclared after ANSI port list");
                if (!header_names.count(name))
                    throw ParseError(nloc, "port '" + name +
                                               "' is not in the port list");
                for (auto& p : m.ports) {
                    if (p.name != name) continue;
                    if (port_has_dir_.count(name))
                        throw ParseError(nloc,
                                         "duplicate direction declaration "
                                         "for port '" + name + "'");
                    p.dir = dir;
                    p.is_reg = is_reg;
                    p.range = clone_range(range);
                    port_has_dir_.insert(name);
                }
            } while (accept_punct(","));
            expect_punct(";");
            (void)loc;
            return;
        }
        if (t.is_kw("wire") || t.is_kw("reg")) {
            bool is_reg = t.is_kw("reg");
            advance();
            std::optional<Range> range = parse_opt_range_shared();
            do {
                NetDecl n;
                n.loc = peek().loc;
                n.is_reg = is_reg;
                n.range = clone_range(range);
                n.name = expect_ident();
                if (accept_punct("=")) {
                    if (is_reg)
                        throw ParseError(n.loc,
                                         "reg declaration assignment is not "
                                         "supported");
                    n.init = parse_expr();
                }
                m.nets.push_back(std::move(n));
            } while (accept_punct(","));
            expect_punct(";");
            // wire w = e; behaves as a declaration plus continuous assign
            for (auto& n : m.nets) {
                if (!n.init) continue;
                ModuleItem item;
                item.kind = ModuleItem::Kind::Assign;
                item.assign.loc = n.loc;
                auto lhs = Expr::make(Expr::Kind::Ident, n.loc);
                lhs->ident = n.name;
                item.assign.lhs = std::move(lhs);
                item.assign.rhs = std::move(n.init);
                n.init = nullptr;
                m.items.push_back(std::move(item));
            }
            return;
        }
        if (t.is_kw("assign")) {
            Loc loc = t.loc;
            advance();
            ModuleItem item;
            item.kind = ModuleItem::Kind::Assign;
            item.assign.loc = loc;
            item.assign.lhs = parse_lvalue();
            expect_punct("=");
            item.assign.rhs = parse_expr();
            expect_punct(";");
            m.items.push_back(std::move(item));
            return;
        }
        if (t.is_kw("always")) {
            Loc loc = t.loc;
            advance();
            ModuleItem item;
            item.kind = ModuleItem::Kind::Always;
            item.always.loc = loc;
            item.always.event = parse_event_control();
            item.always.body = parse_statement();
            m.items.push_back(std::move(item));
            return;
        }
        if (t.is_kw("initial")) {
            diags.warning(t.loc, "initial block ignored");
            advance();
            skip_statement();
            return;
        }
        if (t.kind == TokKind::Identifier) {
            m.items.push_back(parse_instance());
            return;
        }
        fail("module item");
    }

    std::optional<Range> parse_opt_range_shared() {
        if (!peek().is_punct("[")) return std::nullopt;
        advance();
        Range r;
        r.msb = parse_expr();
        expect_punct(":");
        r.lsb = parse_expr();
        expect_punct("]");
        return r;
    }

    static std::optional<Range> clone_range(const std::optional<Range>& r) {
        if (!r) return std::nullopt;
        Range c;
        c.msb = clone_expr(*r->msb);
        c.lsb = clone_expr(*r->lsb);
        return c;
    }

    static ExprPtr clone_expr(const Expr& e) {
        auto c = Expr::make(e.kind, e.loc);
        c->ident = e.ident;
        c->literal = e.literal;
        for (const auto& op : e.operands) c->operands.push_back(clone_expr(*op));
        return c;
    }

    // -- Instances ----------------------------------------------------------

    ModuleItem parse_instance() {
        ModuleItem item;
        item.kind = ModuleItem::Kind::Instance;
        InstanceDecl& inst = item.instance;
        inst.loc = peek().loc;
        inst.target_module = expect_ident();

        if (accept_punct("#")) {
            expect_punct("(");
            bool named = peek().is_punct(".");
            inst.params_positional = !named;
            do {
                Connection c;
                c.loc = peek().loc;
                if (named) {
                    expect_punct(".");
                    c.formal = expect_ident();
                    expect_punct("(");
                    c.actual = parse_expr();
                    expect_punct(")");
                } else {
                    if (peek().is_punct("."))
                        throw ParseError(peek().loc,
                                         "mixed named and positional "
                                         "parameter overrides");
                    c.actual = parse_expr();
                }
                inst.param_overrides.push_back(std::move(c));
            } while (accept_punct(","));
            expect_punct(")");
        }

        inst.instance_name = expect_ident();
        expect_punct("(");
        if (!peek().is_punct(")")) {
            bool named = peek().is_punct(".");
            inst.positional = !named;
            do {
                Connection c;
                c.loc = peek().loc;
                if (named) {
                    if (!peek().is_punct("."))
                        throw ParseError(peek().loc,
                                         "mixed named and positional "
                                         "connections");
                    advance();
                    c.formal = expect_ident();
                    expect_punct("(");
                    if (!peek().is_punct(")")) c.actual = parse_expr();
                    expect_punct(")");
                } else {
                    if (peek().is_punct("."))
                        throw ParseError(peek().loc,
                                         "mixed named and positional "
                                         "connections");
                    c.actual = parse_expr();
                }
                inst.conns.push_back(std::move(c));
            } while (accept_punct(","));
        }
        expect_punct(")");
        expect_punct(";");
        return item;
    }

    // -- Statements ---------------------------------------------------------

    EventControl parse_event_control() {
        EventControl ev;
        expect_punct("@");
        if (accept_punct("*")) {
            ev.star = true;
            return ev;
        }
        expect_punct("(");
        if (accept_punct("*")) {
            ev.star = true;
            expect_punct(")");
            return ev;
        }
        do {
            EventControl::Item it;
            it.loc = peek().loc;
            if (accept_kw("posedge"))
                it.edge = EventControl::Item::Edge::Pos;
            else if (accept_kw("negedge"))
                it.edge = EventControl::Item::Edge::Neg;
            it.signal = expect_ident();
            ev.items.push_back(std::move(it));
        } while (accept_kw("or") || accept_punct(","));
        expect_punct(")");
        return ev;
    }

    StmtPtr parse_statement() {
        check_unsupported();
        const Token& t = peek();
        if (t.is_kw("begin")) {
            auto s = Stmt::make(Stmt::Kind::Block, t.loc);
            advance();
            while (!peek().is_kw("end")) {
                if (at_end()) fail("'end'");
                s->stmts.push_back(parse_statement());
            }
            advance();
            return s;
        }
        if (t.is_kw("if")) {
            auto s = Stmt::make(Stmt::Kind::If, t.loc);
            advance();
            expect_punct("(");
            s->cond = parse_expr();
            expect_punct(")");
            s->then_branch = parse_statement();
            if (accept_kw("else")) s->else_branch = parse_statement();
            return s;
        }
        if (t.is_kw("case") || t.is_kw("casez")) {
            auto s = Stmt::make(Stmt::Kind::Case, t.loc);
            s->casez = t.is_kw("casez");
            advance();
            expect_punct("(");
            s->subject = parse_expr();
            expect_punct(")");
            while (!peek().is_kw("endcase")) {
                if (at_end()) fail("'endcase'");
                CaseItem item;
                if (accept_kw("default")) {
                    accept_punct(":");
                } else {
                    do {
                        item.labels.push_back(parse_expr());
                    } while (accept_punct(","));
                    expect_punct(":");
                }
                item.body = parse_statement();
                s->items.push_back(std::move(item));
            }
            advance();
            return s;
        }
        if (t.is_punct(";")) {
            auto s = Stmt::make(Stmt::Kind::Null, t.loc);
            advance();
            return s;
        }
        // assignment
        auto s = Stmt::make(Stmt::Kind::Assign, t.loc);
        s->lhs = parse_lvalue();
        if (accept_punct("<="))
            s->nonblocking = true;
        else
            expect_punct("=");
        s->rhs = parse_expr();
        expect_punct(";");
        return s;
    }

    // Skips one statement without building an AST (used for `initial`).
    void skip_statement() {
        check_skippable();
        if (peek().is_kw("begin")) {
            advance();
            int depth = 1;
            while (depth > 0) {
                if (at_end()) fail("'end'");
                check_skippable();
                if (peek().is_kw("begin")) ++depth;
                if (peek().is_kw("end")) --depth;
                advance();
            }
            return;
        }
        while (!peek().is_punct(";")) {
            if (at_end()) fail("';'");
            check_skippable();
            advance();
        }
        advance();
    }

    void check_skippable() const {
        // Constructs that are unsupported even inside ignored regions.
        const Token& t = peek();
        if (t.kind == TokKind::Keyword &&
            (t.text == "generate" || t.text == "function" ||
             t.text == "task" || t.text == "specify" || t.text == "primitive"))
            throw ParseError(t.loc, "unsupported construct: " + t.text);
    }

    // -- Expressions --------------------------------------------------------

    ExprPtr parse_lvalue() {
        if (peek().is_punct("{")) return parse_concat();
        Loc loc = peek().loc;
        std::string name = expect_ident();
        return finish_select(std::move(name), loc);
    }

    ExprPtr parse_expr() { return parse_ternary(); }

    ExprPtr parse_ternary() {
        auto cond = parse_binary(0);
        if (!peek().is_punct("?")) return cond;
        Loc loc = peek().loc;
        advance();
        auto e = Expr::make(Expr::Kind::Ternary, loc);
        e->operands.push_back(std::move(cond));
        e->operands.push_back(parse_expr());
        expect_punct(":");
        e->operands.push_back(parse_expr());
        return e;
    }

    // Binary precedence tiers, lowest first.
    static const std::vector<std::vector<std::string>>& tiers() {
        static const std::vector<std::vector<std::string>> t = {
            {"||"}, {"&&"}, {"|"}, {"^"}, {"&"},
            {"==", "!="}, {"<", "<=", ">", ">="},
            {"<<", ">>"}, {"+", "-"}, {"*", "/", "%"}};
        return t;
    }

    ExprPtr parse_binary(size_t tier) {
        if (tier >= tiers().size()) return parse_unary();
        auto lhs = parse_binary(tier + 1);
        while (true) {
            const Token& t = peek();
            bool matched = false;
            for (const auto& op : tiers()[tier]) {
                if (t.is_punct(op)) {
                    Loc loc = t.loc;
                    advance();
                    auto e = Expr::make(Expr::Kind::Binary, loc);
                    e->ident = op;
                    e->operands.push_back(std::move(lhs));
                    e->operands.push_back(parse_binary(tier + 1));
                    lhs = std::move(e);
                    matched = true;
                    break;
                }
            }
            if (!matched) return lhs;
        }
    }

    ExprPtr parse_unary() {
        const Token& t = peek();
        for (const char* op : {"~", "!", "-", "&", "|", "^", "+"}) {
            if (t.is_punct(op)) {
                Loc loc = t.loc;
                advance();
                auto e = Expr::make(Expr::Kind::Unary, loc);
                e->ident = op;
                e->operands.push_back(parse_unary());
                return e;
            }
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        check_unsupported();
        const Token& t = peek();
        if (t.kind == TokKind::Number) {
            auto e = Expr::make(Expr::Kind::Literal, t.loc);
            e->literal = t.number;
            advance();
            return e;
        }
        if (t.is_punct("(")) {
            advance();
            auto e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.is_punct("{")) return parse_concat();
        if (t.kind == TokKind::Identifier) {
            Loc loc = t.loc;
            std::string name = advance().text;
            return finish_select(std::move(name), loc);
        }
        fail("expression");
    }

    ExprPtr finish_select(std::string name, Loc loc) {
        if (!peek().is_punct("[")) {
            auto e = Expr::make(Expr::Kind::Ident, loc);
            e->ident = std::move(name);
            return e;
        }
        advance();
        auto first = parse_expr();
        if (accept_punct(":")) {
            auto e = Expr::make(Expr::Kind::PartSelect, loc);
            e->ident = std::move(name);
            e->operands.push_back(std::move(first));
            e->operands.push_back(parse_expr());
            expect_punct("]");
            return e;
        }
        expect_punct("]");
        auto e = Expr::make(Expr::Kind::BitSelect, loc);
        e->ident = std::move(name);
        e->operands.push_back(std::move(first));
        return e;
    }

    ExprPtr parse_concat() {
        Loc loc = peek().loc;
        expect_punct("{");
        auto first = parse_expr();
        if (peek().is_punct("{")) {
            // replication {N{...}}
            auto e = Expr::make(Expr::Kind::Repl, loc);
            e->operands.push_back(std::move(first));
            advance();
            do {
                e->operands.push_back(parse_expr());
            } while (accept_punct(","));
            expect_punct("}");
            expect_punct("}");
            return e;
        }
        auto e = Expr::make(Expr::Kind::Concat, loc);
        e->operands.push_back(std::move(first));
        while (accept_punct(",")) e->operands.push_back(parse_expr());
        expect_punct("}");
        return e;
    }

    std::unordered_set<std::string> port_has_dir_;
};

} // namespace

void parse_tokens(const std::vector<Token>& tokens, SourceUnit& unit,
                  DiagnosticSink& diags) {
    Parser p(tokens, unit, diags);
    p.run();
    // duplicate module names across the whole unit
    std::unordered_map<std::string, const ModuleDecl*> seen;
    for (const auto& m : unit.modules) {
        auto [it, inserted] = seen.emplace(m.name, &m);
        if (!inserted)
            throw ParseError(m.loc, "duplicate module '" + m.name + "'");
    }
}

SourceUnit parse_files(
    const std::vector<std::pair<std::string, std::string>>& files,
    DiagnosticSink& diags) {
    SourceUnit unit;
    unit.files = files;
    for (const auto& [path, text] : files) {
        auto toks = tokenize(text, path);
        parse_tokens(toks, unit, diags);
    }
    return unit;
}

SourceUnit parse_paths(const std::vector<std::string>& paths,
                       DiagnosticSink& diags) {
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw ToolError("cannot open file: " + p);
        std::ostringstream ss;
        ss << in.rdbuf();
        files.emplace_back(p, ss.str());
    }
    return parse_files(files, diags);
}

} // namespace am::frontend
