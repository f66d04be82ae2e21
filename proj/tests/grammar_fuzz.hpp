#pragma once

// Random generator for template-conforming assertions plus an independent
// recognizer of the same grammar. The recognizer is a second implementation
// used as the construction check when mutating: a mutant it still accepts
// is in-grammar and must be excluded from rejection statistics.

#include <cctype>
#include <random>
#include <string>
#include <vector>

namespace am::test {

struct Fuzzer {
    std::mt19937 rng;
    explicit Fuzzer(unsigned seed) : rng(seed) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    std::string ident() {
        static const char* names[] = {"clk", "padder", "reset", "f_unit",
                                      "out_ready", "in", "state2", "ack"};
        return names[pick(8)];
    }

    std::vector<std::string> sigref() {
        std::vector<std::string> t{ident(), ".", ident()};
        int sel = pick(3);
        if (sel == 1) {
            t.insert(t.end(), {"[", std::to_string(pick(32)), "]"});
        } else if (sel == 2) {
            int msb = pick(32), lsb = pick(msb + 1);
            t.insert(t.end(), {"[", std::to_string(msb), ":",
                               std::to_string(lsb), "]"});
        }
        return t;
    }

    std::vector<std::string> literal() {
        switch (pick(4)) {
            case 0: return {std::to_string(pick(1000))};
            case 1: return {std::to_string(1 + pick(32)) + "'b" +
                            (pick(2) ? "101" : "0")};
            case 2: return {std::to_string(1 + pick(64)) + "'hff"};
            default: return {std::to_string(1 + pick(32)) + "'d" +
                             std::to_string(pick(99))};
        }
    }

    std::vector<std::string> ap(int depth) {
        std::vector<std::string> t;
        int kind = pick(depth > 0 ? 3 : 2);
        if (kind == 0) {
            if (pick(2)) t.push_back("!");
            auto s = sigref();
            t.insert(t.end(), s.begin(), s.end());
        } else if (kind == 1) {
            static const char* relops[] = {"==", "!=", "<", "<=", ">", ">="};
            auto s = sigref();
            t.insert(t.end(), s.begin(), s.end());
            t.push_back(relops[pick(6)]);
            if (pick(2)) {
                auto l = literal();
                t.insert(t.end(), l.begin(), l.end());
            } else {
                auto r = sigref();
                t.insert(t.end(), r.begin(), r.end());
            }
        } else {
            t.push_back("(");
            auto inner = apexpr(depth - 1);
            t.insert(t.end(), inner.begin(), inner.end());
            t.push_back(")");
        }
        return t;
    }

    std::vector<std::string> apexpr(int depth) {
        auto t = ap(depth);
        int extra = pick(3);
        for (int i = 0; i < extra; ++i) {
            t.push_back(pick(2) ? "&&" : "||");
            auto next = ap(depth);
            t.insert(t.end(), next.begin(), next.end());
        }
        return t;
    }

    std::vector<std::string> assertion(int depth = 4) {
        std::vector<std::string> t{"assert", "property", "(",
                                   "@", "(", "posedge"};
        if (pick(2)) {
            t.push_back(ident());
        } else {
            auto c = std::vector<std::string>{ident(), ".", ident()};
            t.insert(t.end(), c.begin(), c.end());
        }
        t.push_back(")");
        t.push_back("(");
        auto a = apexpr(depth - 1);
        t.insert(t.end(), a.begin(), a.end());
        t.insert(t.end(), {")", "|->", "("});
        auto c = apexpr(depth - 1);
        t.insert(t.end(), c.begin(), c.end());
        t.insert(t.end(), {")", ")", ";"});
        return t;
    }
};

inline std::string join_tokens(const std::vector<std::string>& toks) {
    std::string s;
    for (const auto& t : toks) {
        if (!s.empty()) s += ' ';
        s += t;
    }
    return s;
}

struct Acceptor {
    std::vector<std::string> toks;
    size_t pos = 0;
    bool failed = false;

    static bool is_ident(const std::string& t) {
        if (t.empty() || (!std::isalpha((unsigned char)t[0]) && t[0] != '_'))
            return false;
        for (char c : t)
            if (!std::isalnum((unsigned char)c) && c != '_' && c != '$')
                return false;
        return true;
    }
    static bool is_plain_number(const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit((unsigned char)c)) return false;
        return true;
    }
    static bool is_sized_literal(const std::string& t) {
        size_t q = t.find('\'');
        if (q == std::string::npos || q == 0 || q + 2 > t.size()) return false;
        if (!is_plain_number(t.substr(0, q))) return false;
        char base = (char)std::tolower((unsigned char)t[q + 1]);
        std::string digits = t.substr(q + 2);
        if (digits.empty()) return false;
        for (char raw : digits) {
            char c = (char)std::tolower((unsigned char)raw);
            bool ok = base == 'b'   ? (c == '0' || c == '1')
                      : base == 'd' ? std::isdigit((unsigned char)c) != 0
                      : base == 'h' ? std::isxdigit((unsigned char)c) != 0
                                    : false;
            if (!ok) return false;
        }
        return true;
    }

    std::string peek() const { return pos < toks.size() ? toks[pos] : ""; }
    bool eat(const std::string& t) {
        if (peek() != t) return failed = true, false;
        ++pos;
        return true;
    }
    // keywords are not reserved: `posedge` etc. are legal signal names
    bool eat_ident() {
        if (!is_ident(peek())) return failed = true, false;
        ++pos;
        return true;
    }

    bool sigref() {
        if (!eat_ident()) return false;
        if (!eat(".")) return false;
        if (!eat_ident()) return false;
        if (peek() == "[") {
            eat("[");
            if (!is_plain_number(peek())) return failed = true, false;
            ++pos;
            if (peek() == ":") {
                eat(":");
                if (!is_plain_number(peek())) return failed = true, false;
                ++pos;
            }
            if (!eat("]")) return false;
        }
        return true;
    }

    bool operand() {
        if (is_plain_number(peek()) || is_sized_literal(peek())) {
            ++pos;
            return true;
        }
        return sigref();
    }

    bool ap() {
        if (peek() == "!") {
            eat("!");
            return sigref();
        }
        if (peek() == "(") {
            eat("(");
            if (!apexpr()) return false;
            return eat(")");
        }
        if (!sigref()) return false;
        static const char* relops[] = {"==", "!=", "<", "<=", ">", ">="};
        for (const char* r : relops)
            if (peek() == r) {
                ++pos;
                return operand();
            }
        return true;
    }

    bool apexpr() {
        if (!ap()) return false;
        while (peek() == "&&" || peek() == "||") {
            ++pos;
            if (!ap()) return false;
        }
        return true;
    }

    bool accept() {
        bool clock_ok = eat("assert") && eat("property") && eat("(") &&
                        eat("@") && eat("(") && eat("posedge") && eat_ident();
        if (!clock_ok) return false;
        if (peek() == ".") {
            eat(".");
            if (!eat_ident()) return false;
        }
        bool body = eat(")") && eat("(") && apexpr() && eat(")") &&
                    eat("|->") && eat("(") && apexpr() && eat(")") &&
                    eat(")") && eat(";");
        return body && pos == toks.size() && !failed;
    }
};

inline bool independent_accepts(const std::vector<std::string>& toks) {
    Acceptor a;
    a.toks = toks;
    return a.accept();
}

} // namespace am::test
