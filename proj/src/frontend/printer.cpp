#include "am/frontend/printer.hpp"

#include <sstream>

namespace am::frontend {

namespace {

void print_expr_to(const Expr& e, std::ostream& os) {
    switch (e.kind) {
        case Expr::Kind::Ident:
            os << e.ident;
            break;
        case Expr::Kind::Literal: {
            const Number& n = e.literal;
            if (n.sized)
                os << n.width << '\'' << n.base << n.digits;
            else if (n.base == 'd')
                os << n.digits;
            else
                os << '\'' << n.base << n.digits;
            break;
        }
        case Expr::Kind::Unary:
            os << e.ident << '(';
            print_expr_to(*e.operands[0], os);
            os << ')';
            break;
        case Expr::Kind::Binary:
            os << '(';
            print_expr_to(*e.operands[0], os);
            os << ' ' << e.ident << ' ';
            print_expr_to(*e.operands[1], os);
            os << ')';
            break;
        case Expr::Kind::Ternary:
            os << '(';
            print_expr_to(*e.operands[0], os);
            os << " ? ";
            print_expr_to(*e.operands[1], os);
            os << " : ";
            print_expr_to(*e.operands[2], os);
            os << ')';
            break;
        case Expr::Kind::BitSelect:
            os << e.ident << '[';
            print_expr_to(*e.operands[0], os);
            os << ']';
            break;
        case Expr::Kind::PartSelect:
            os << e.ident << '[';
            print_expr_to(*e.operands[0], os);
            os << ':';
            print_expr_to(*e.operands[1], os);
            os << ']';
            break;
        case Expr::Kind::Concat: {
            os << '{';
            bool first = true;
            for (const auto& op : e.operands) {
                if (!first) os << ", ";
                first = false;
                print_expr_to(*op, os);
            }
            os << '}';
            break;
        }
        case Expr::Kind::Repl: {
            os << '{';
            print_expr_to(*e.operands[0], os);
            os << '{';
            bool first = true;
            for (size_t i = 1; i < e.operands.size(); ++i) {
                if (!first) os << ", ";
                first = false;
                print_expr_to(*e.operands[i], os);
            }
            os << "}}";
            break;
        }
    }
}

void print_range(const std::optional<Range>& r, std::ostream& os) {
    if (!r) return;
    os << '[';
    print_expr_to(*r->msb, os);
    os << ':';
    print_expr_to(*r->lsb, os);
    os << "] ";
}

void print_stmt(const Stmt& s, std::ostream& os, int indent) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    switch (s.kind) {
        case Stmt::Kind::Block:
            os << pad << "begin\n";
            for (const auto& st : s.stmts) print_stmt(*st, os, indent + 1);
            os << pad << "end\n";
            break;
        case Stmt::Kind::If:
            os << pad << "if (";
            print_expr_to(*s.cond, os);
            os << ")\n";
            print_stmt(*s.then_branch, os, indent + 1);
            if (s.else_branch) {
                os << pad << "else\n";
                print_stmt(*s.else_branch, os, indent + 1);
            }
            break;
        case Stmt::Kind::Case: {
            os << pad << (s.casez ? "casez (" : "case (");
            print_expr_to(*s.subject, os);
            os << ")\n";
            for (const auto& item : s.items) {
                if (item.labels.empty()) {
                    os << pad << "  default:\n";
                } else {
                    os << pad << "  ";
                    bool first = true;
                    for (const auto& l : item.labels) {
                        if (!first) os << ", ";
                        first = false;
                        print_expr_to(*l, os);
                    }
                    os << ":\n";
                }
                print_stmt(*item.body, os, indent + 2);
            }
            os << pad << "endcase\n";
            break;
        }
        case Stmt::Kind::Assign:
            os << pad;
            print_expr_to(*s.lhs, os);
            os << (s.nonblocking ? " <= " : " = ");
            print_expr_to(*s.rhs, os);
            os << ";\n";
            break;
        case Stmt::Kind::Null:
            os << pad << ";\n";
            break;
    }
}

} // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_expr_to(e, os);
    return os.str();
}

std::string print_module(const ModuleDecl& m) {
    std::ostringstream os;
    os << "module " << m.name << " (";
    bool first = true;
    for (const auto& p : m.ports) {
        if (!first) os << ", ";
        first = false;
        os << port_dir_name(p.dir) << ' ';
        if (p.is_reg) os << "reg ";
        print_range(p.range, os);
        os << p.name;
    }
    os << ");\n";
    for (const auto& p : m.params) {
        os << "  parameter " << p.name << " = ";
        print_expr_to(*p.value, os);
        os << ";\n";
    }
    for (const auto& n : m.nets) {
        os << "  " << (n.is_reg ? "reg " : "wire ");
        print_range(n.range, os);
        os << n.name << ";\n";
    }
    for (const auto& item : m.items) {
        switch (item.kind) {
            case ModuleItem::Kind::Assign:
                os << "  assign ";
                print_expr_to(*item.assign.lhs, os);
                os << " = ";
                print_expr_to(*item.assign.rhs, os);
                os << ";\n";
                break;
            case ModuleItem::Kind::Always: {
                os << "  always @";
                const EventControl& ev = item.always.event;
                if (ev.star) {
                    os << "(*)";
                } else {
                    os << '(';
                    bool f2 = true;
                    for (const auto& it : ev.items) {
                        if (!f2) os << " or ";
                        f2 = false;
                        if (it.edge == EventControl::Item::Edge::Pos)
                            os << "posedge ";
                        else if (it.edge == EventControl::Item::Edge::Neg)
                            os << "negedge ";
                        os << it.signal;
                    }
                    os << ')';
                }
                os << '\n';
                print_stmt(*item.always.body, os, 2);
                break;
            }
            case ModuleItem::Kind::Instance: {
                const InstanceDecl& inst = item.instance;
                os << "  " << inst.target_module;
                if (!inst.param_overrides.empty()) {
                    os << " #(";
                    bool f2 = true;
                    for (const auto& c : inst.param_overrides) {
                        if (!f2) os << ", ";
                        f2 = false;
                        if (!inst.params_positional) os << '.' << c.formal << '(';
                        print_expr_to(*c.actual, os);
                        if (!inst.params_positional) os << ')';
                    }
                    os << ')';
                }
                os << ' ' << inst.instance_name << " (";
                bool f2 = true;
                for (const auto& c : inst.conns) {
                    if (!f2) os << ", ";
                    f2 = false;
                    if (!inst.positional) {
                        os << '.' << c.formal << '(';
                        if (c.actual) print_expr_to(*c.actual, os);
                        os << ')';
                    } else {
                        print_expr_to(*c.actual, os);
                    }
                }
                os << ");\n";
                break;
            }
        }
    }
    os << "endmodule\n";
    return os.str();
}

std::string print_unit(const SourceUnit& unit) {
    std::string out;
    for (const auto& m : unit.modules) {
        out += print_module(m);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural equality (locations excluded)
// ---------------------------------------------------------------------------

namespace {

bool stmt_equal(const Stmt& a, const Stmt& b);

bool opt_expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return expr_equal(*a, *b);
}

bool range_equal(const std::optional<Range>& a, const std::optional<Range>& b) {
    if (!a || !b) return !a && !b;
    return expr_equal(*a->msb, *b->msb) && expr_equal(*a->lsb, *b->lsb);
}

bool stmt_equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Stmt::Kind::Block:
            if (a.stmts.size() != b.stmts.size()) return false;
            for (size_t i = 0; i < a.stmts.size(); ++i)
                if (!stmt_equal(*a.stmts[i], *b.stmts[i])) return false;
            return true;
        case Stmt::Kind::If:
            if (!expr_equal(*a.cond, *b.cond)) return false;
            if (!stmt_equal(*a.then_branch, *b.then_branch)) return false;
            if (!a.else_branch != !b.else_branch) return false;
            return !a.else_branch || stmt_equal(*a.else_branch, *b.else_branch);
        case Stmt::Kind::Case: {
            if (a.casez != b.casez) return false;
            if (!expr_equal(*a.subject, *b.subject)) return false;
            if (a.items.size() != b.items.size()) return false;
            for (size_t i = 0; i < a.items.size(); ++i) {
                const auto& ia = a.items[i];
                const auto& ib = b.items[i];
                if (ia.labels.size() != ib.labels.size()) return false;
                for (size_t j = 0; j < ia.labels.size(); ++j)
                    if (!expr_equal(*ia.labels[j], *ib.labels[j])) return false;
                if (!stmt_equal(*ia.body, *ib.body)) return false;
            }
            return true;
        }
        case Stmt::Kind::Assign:
            return a.nonblocking == b.nonblocking &&
                   expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
        case Stmt::Kind::Null:
            return true;
    }
    return false;
}

} // namespace

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.ident != b.ident) return false;
    if (a.kind == Expr::Kind::Literal && !(a.literal == b.literal))
        return false;
    if (a.operands.size() != b.operands.size()) return false;
    for (size_t i = 0; i < a.operands.size(); ++i)
        if (!expr_equal(*a.operands[i], *b.operands[i])) return false;
    return true;
}

bool module_equal(const ModuleDecl& a, const ModuleDecl& b) {
    if (a.name != b.name) return false;
    if (a.params.size() != b.params.size() ||
        a.ports.size() != b.ports.size() || a.nets.size() != b.nets.size() ||
        a.items.size() != b.items.size())
        return false;
    for (size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].name != b.params[i].name) return false;
        if (!expr_equal(*a.params[i].value, *b.params[i].value)) return false;
    }
    for (size_t i = 0; i < a.ports.size(); ++i) {
        const auto& pa = a.ports[i];
        const auto& pb = b.ports[i];
        if (pa.name != pb.name || pa.dir != pb.dir || pa.is_reg != pb.is_reg)
            return false;
        if (!range_equal(pa.range, pb.range)) return false;
    }
    for (size_t i = 0; i < a.nets.size(); ++i) {
        const auto& na = a.nets[i];
        const auto& nb = b.nets[i];
        if (na.name != nb.name || na.is_reg != nb.is_reg) return false;
        if (!range_equal(na.range, nb.range)) return false;
        if (!opt_expr_equal(na.init, nb.init)) return false;
    }
    for (size_t i = 0; i < a.items.size(); ++i) {
        const auto& ia = a.items[i];
        const auto& ib = b.items[i];
        if (ia.kind != ib.kind) return false;
        switch (ia.kind) {
            case ModuleItem::Kind::Assign:
                if (!expr_equal(*ia.assign.lhs, *ib.assign.lhs) ||
                    !expr_equal(*ia.assign.rhs, *ib.assign.rhs))
                    return false;
                break;
            case ModuleItem::Kind::Always: {
                const auto& ea = ia.always.event;
                const auto& eb = ib.always.event;
                if (ea.star != eb.star || ea.items.size() != eb.items.size())
                    return false;
                for (size_t j = 0; j < ea.items.size(); ++j)
                    if (ea.items[j].edge != eb.items[j].edge ||
                        ea.items[j].signal != eb.items[j].signal)
                        return false;
                if (!stmt_equal(*ia.always.body, *ib.always.body)) return false;
                break;
            }
            case ModuleItem::Kind::Instance: {
                const auto& xa = ia.instance;
                const auto& xb = ib.instance;
                if (xa.target_module != xb.target_module ||
                    xa.instance_name != xb.instance_name ||
                    xa.positional != xb.positional ||
                    xa.params_positional != xb.params_positional ||
                    xa.conns.size() != xb.conns.size() ||
                    xa.param_overrides.size() != xb.param_overrides.size())
                    return false;
                for (size_t j = 0; j < xa.conns.size(); ++j) {
                    if (xa.conns[j].formal != xb.conns[j].formal) return false;
                    if (!opt_expr_equal(xa.conns[j].actual, xb.conns[j].actual))
                        return false;
                }
                for (size_t j = 0; j < xa.param_overrides.size(); ++j) {
                    if (xa.param_overrides[j].formal !=
                        xb.param_overrides[j].formal)
                        return false;
                    if (!opt_expr_equal(xa.param_overrides[j].actual,
                                        xb.param_overrides[j].actual))
                        return false;
                }
                break;
            }
        }
    }
    return true;
}

bool unit_equal(const SourceUnit& a, const SourceUnit& b) {
    if (a.modules.size() != b.modules.size()) return false;
    for (size_t i = 0; i < a.modules.size(); ++i)
        if (!module_equal(a.modules[i], b.modules[i])) return false;
    return true;
}

} // namespace am::frontend
