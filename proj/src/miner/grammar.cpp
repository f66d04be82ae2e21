#include "am/miner/grammar.hpp"

#include <cctype>
#include <sstream>

namespace am::miner {

const char* kAssertionTemplate =
    "assert property (@(posedge <CLK>)\n"
    "  (<AP> { && <AP> } { || <AP> } ...) |-> (<AP> { && <AP> } { || <AP> } "
    "...)\n"
    ");";

const char* assert_status_name(AssertStatus s) {
    switch (s) {
        case AssertStatus::Raw: return "raw";
        case AssertStatus::SyntaxOk: return "syntax_ok";
        default: return "resolved";
    }
}

void ApSeq::collect_sigrefs(std::vector<const SigRef*>& out) const {
    for (const auto& ap : items) {
        switch (ap.kind) {
            case Ap::Kind::Sig:
                out.push_back(&ap.sig);
                break;
            case Ap::Kind::Cmp:
                out.push_back(&ap.sig);
                if (!ap.rhs.is_literal) out.push_back(&ap.rhs.sig);
                break;
            case Ap::Kind::Group:
                ap.group->collect_sigrefs(out);
                break;
        }
    }
}

bool apseq_equal(const ApSeq& a, const ApSeq& b) {
    if (a.ops != b.ops || a.items.size() != b.items.size()) return false;
    for (size_t i = 0; i < a.items.size(); ++i) {
        const Ap& x = a.items[i];
        const Ap& y = b.items[i];
        if (x.kind != y.kind) return false;
        switch (x.kind) {
            case Ap::Kind::Sig:
                if (x.negated != y.negated || !(x.sig == y.sig)) return false;
                break;
            case Ap::Kind::Cmp:
                if (!(x.sig == y.sig) || x.relop != y.relop ||
                    !(x.rhs == y.rhs))
                    return false;
                break;
            case Ap::Kind::Group:
                if (!apseq_equal(*x.group, *y.group)) return false;
                break;
        }
    }
    return true;
}

namespace {

struct SvaToken {
    enum class Kind { Ident, Number, Punct, End } kind = Kind::End;
    std::string text;
    SvaLiteral number;
    size_t offset = 0;
};

struct SvaParseFail {
    std::string message;
    size_t offset;
};

std::vector<SvaToken> sva_lex(const std::string& s) {
    std::vector<SvaToken> toks;
    size_t i = 0;
    auto push = [&](SvaToken::Kind k, std::string text, size_t off) {
        SvaToken t;
        t.kind = k;
        t.text = std::move(text);
        t.offset = off;
        toks.push_back(std::move(t));
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
            c == '$') {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) ||
                    s[i] == '_' || s[i] == '$'))
                ++i;
            push(SvaToken::Kind::Ident, s.substr(start, i - start), start);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            std::string lead;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(
                                        s[i])) ||
                                    s[i] == '_'))
                lead.push_back(s[i++]);
            SvaToken t;
            t.kind = SvaToken::Kind::Number;
            t.offset = start;
            std::string clean;
            for (char d : lead)
                if (d != '_') clean.push_back(d);
            if (i < s.size() && s[i] == '\'') {
                ++i;
                if (i >= s.size())
                    throw SvaParseFail{"literal base missing", i};
                char base = static_cast<char>(
                    std::tolower(static_cast<unsigned char>(s[i])));
                if (base != 'b' && base != 'h' && base != 'd')
                    throw SvaParseFail{
                        std::string("unsupported literal base '") + s[i] + "'",
                        i};
                ++i;
                std::string digits;
                while (i < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[i])) ||
                        s[i] == '_')) {
                    char d = static_cast<char>(
                        std::tolower(static_cast<unsigned char>(s[i])));
                    if (d != '_') digits.push_back(d);
                    ++i;
                }
                if (digits.empty())
                    throw SvaParseFail{"literal has no digits", i};
                for (char d : digits) {
                    bool ok = base == 'b'   ? (d == '0' || d == '1')
                              : base == 'd' ? (d >= '0' && d <= '9')
                                            : std::isxdigit(
                                                  static_cast<unsigned char>(
                                                      d)) != 0;
                    if (!ok)
                        throw SvaParseFail{
                            std::string("digit '") + d +
                                "' invalid for base '" + base + "'",
                            start};
                }
                t.number.sized = true;
                t.number.width = std::stoi(clean);
                t.number.base = base;
                t.number.digits = digits;
                t.text = clean + "'" + base + digits;
            } else {
                t.number.sized = false;
                t.number.base = 'd';
                t.number.digits = clean;
                t.text = clean;
            }
            toks.push_back(std::move(t));
            continue;
        }
        if (c == '|' && i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
            push(SvaToken::Kind::Punct, "|->", i);
            i += 3;
            continue;
        }
        static const char* two[] = {"&&", "||", "==", "!=", "<=", ">="};
        bool matched = false;
        for (const char* op : two) {
            if (c == op[0] && i + 1 < s.size() && s[i + 1] == op[1]) {
                push(SvaToken::Kind::Punct, op, i);
                i += 2;
                matched = true;
                break;
            }
        }
        if (matched) continue;
        static const std::string singles = "()[].:;!<>@";
        if (singles.find(c) != std::string::npos) {
            push(SvaToken::Kind::Punct, std::string(1, c), i);
            ++i;
            continue;
        }
        throw SvaParseFail{std::string("unexpected character '") + c + "'", i};
    }
    push(SvaToken::Kind::End, "", s.size());
    return toks;
}

struct SvaParser {
    const std::vector<SvaToken>& toks;
    size_t pos = 0;

    explicit SvaParser(const std::vector<SvaToken>& t) : toks(t) {}

    const SvaToken& peek() const { return toks[pos]; }
    const SvaToken& advance() { return toks[pos + 1 < toks.size() ? pos++ : pos]; }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = peek().kind == SvaToken::Kind::End
                              ? "end of text"
                              : "'" + peek().text + "'";
        throw SvaParseFail{"expected " + expected + ", got " + got,
                           peek().offset};
    }
    void expect_punct(const std::string& p) {
        if (peek().kind != SvaToken::Kind::Punct || peek().text != p)
            fail("'" + p + "'");
        advance();
    }
    void expect_ident(const std::string& kw) {
        if (peek().kind != SvaToken::Kind::Ident || peek().text != kw)
            fail("'" + kw + "'");
        advance();
    }
    std::string take_ident() {
        if (peek().kind != SvaToken::Kind::Ident) fail("identifier");
        return advance().text;
    }
    bool at_punct(const std::string& p) const {
        return peek().kind == SvaToken::Kind::Punct && peek().text == p;
    }

    void parse(DeepAssertion& a) {
        expect_ident("assert");
        expect_ident("property");
        expect_punct("(");
        expect_punct("@");
        expect_punct("(");
        expect_ident("posedge");
        a.clock = parse_clockref();
        expect_punct(")");
        a.antecedent = parse_group();
        expect_punct("|->");
        a.consequent = parse_group();
        expect_punct(")");
        expect_punct(";");
        if (peek().kind != SvaToken::Kind::End) fail("end of assertion");
    }

    SigRef parse_clockref() {
        SigRef r;
        std::string first = take_ident();
        if (at_punct(".")) {
            advance();
            r.scope = first;
            r.signal = take_ident();
        } else {
            r.signal = first;
        }
        return r;
    }

    ApSeq parse_group() {
        expect_punct("(");
        ApSeq seq = parse_apexpr();
        expect_punct(")");
        return seq;
    }

    ApSeq parse_apexpr() {
        ApSeq seq;
        seq.items.push_back(parse_ap());
        while (at_punct("&&") || at_punct("||")) {
            seq.ops.push_back(advance().text);
            seq.items.push_back(parse_ap());
        }
        return seq;
    }

    Ap parse_ap() {
        Ap ap;
        if (at_punct("!")) {
            advance();
            ap.kind = Ap::Kind::Sig;
            ap.negated = true;
            ap.sig = parse_sigref();
            return ap;
        }
        if (at_punct("(")) {
            ap.kind = Ap::Kind::Group;
            ap.group = std::make_unique<ApSeq>(parse_group());
            return ap;
        }
        ap.sig = parse_sigref();
        static const char* relops[] = {"==", "!=", "<", "<=", ">", ">="};
        for (const char* op : relops) {
            if (at_punct(op)) {
                ap.kind = Ap::Kind::Cmp;
                ap.relop = advance().text;
                ap.rhs = parse_operand();
                return ap;
            }
        }
        ap.kind = Ap::Kind::Sig;
        return ap;
    }

    SigRef parse_sigref() {
        SigRef r;
        r.scope = take_ident();
        expect_punct(".");
        r.signal = take_ident();
        if (at_punct("[")) {
            advance();
            r.has_sel = true;
            r.msb = take_number_value();
            if (at_punct(":")) {
                advance();
                r.part = true;
                r.lsb = take_number_value();
            }
            expect_punct("]");
        }
        return r;
    }

    long long take_number_value() {
        if (peek().kind != SvaToken::Kind::Number || peek().number.sized)
            fail("plain decimal index");
        return std::stoll(advance().number.digits);
    }

    Operand parse_operand() {
        Operand o;
        if (peek().kind == SvaToken::Kind::Number) {
            o.is_literal = true;
            o.literal = advance().number;
            return o;
        }
        o.sig = parse_sigref();
        return o;
    }
};

void print_sigref(const SigRef& r, std::ostream& os) {
    if (!r.scope.empty()) os << r.scope << '.';
    os << r.signal;
    if (r.has_sel) {
        os << '[' << r.msb;
        if (r.part) os << ':' << r.lsb;
        os << ']';
    }
}

void print_apseq(const ApSeq& seq, std::ostream& os) {
    for (size_t i = 0; i < seq.items.size(); ++i) {
        if (i > 0) os << ' ' << seq.ops[i - 1] << ' ';
        const Ap& ap = seq.items[i];
        switch (ap.kind) {
            case Ap::Kind::Sig:
                if (ap.negated) os << '!';
                print_sigref(ap.sig, os);
                break;
            case Ap::Kind::Cmp:
                print_sigref(ap.sig, os);
                os << ' ' << ap.relop << ' ';
                if (ap.rhs.is_literal) {
                    const SvaLiteral& l = ap.rhs.literal;
                    if (l.sized)
                        os << l.width << '\'' << l.base << l.digits;
                    else
                        os << l.digits;
                } else {
                    print_sigref(ap.rhs.sig, os);
                }
                break;
            case Ap::Kind::Group:
                os << '(';
                print_apseq(*ap.group, os);
                os << ')';
                break;
        }
    }
}

} // namespace

DeepAssertion validate_syntax(DeepAssertion a) {
    if (a.status != AssertStatus::Raw) return a;
    try {
        auto toks = sva_lex(a.raw);
        SvaParser p(toks);
        DeepAssertion parsed;
        p.parse(parsed);
        a.clock = parsed.clock;
        a.antecedent = std::move(parsed.antecedent);
        a.consequent = std::move(parsed.consequent);
        a.status = AssertStatus::SyntaxOk;
    } catch (const SvaParseFail& f) {
        Loc loc;
        loc.line = 1;
        loc.col = static_cast<int>(f.offset) + 1;
        a.diagnostics.push_back(
            {Severity::Warning, "syntax: " + f.message, loc});
    }
    return a;
}

std::string print_assertion(const DeepAssertion& a) {
    std::ostringstream os;
    os << "assert property (@(posedge ";
    print_sigref(a.clock, os);
    os << ") (";
    print_apseq(a.antecedent, os);
    os << ") |-> (";
    print_apseq(a.consequent, os);
    os << "));";
    return os.str();
}

} // namespace am::miner
