#include "am/frontend/lexer.hpp"

#include <cctype>
#include <cstdint>
#include <unordered_set>

namespace am::frontend {

namespace {

const std::unordered_set<std::string>& keyword_set() {
    static const std::unordered_set<std::string> kws = {
        "module", "endmodule", "input", "output", "inout", "wire", "reg",
        "assign", "always", "if", "else", "case", "casez", "casex",
        "endcase", "default", "begin", "end", "posedge", "negedge", "or",
        "parameter", "localparam", "initial",
        // recognized so the parser can name them in diagnostics
        "generate", "endgenerate", "genvar", "function", "endfunction",
        "task", "endtask", "specify", "endspecify", "primitive",
        "endprimitive", "integer", "real", "for", "while", "repeat",
        "forever", "fork", "join", "defparam", "event", "time", "signed"};
    return kws;
}

struct Lexer {
    std::string_view src;
    const std::string& file;
    size_t pos = 0;
    int line = 1;
    int col = 1;
    std::vector<Token> out;

    Lexer(std::string_view s, const std::string& f) : src(s), file(f) {}

    Loc here() const { return {file, line, col}; }

    bool at_end() const { return pos >= src.size(); }
    char peek(size_t off = 0) const {
        return pos + off < src.size() ? src[pos + off] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void push(TokKind k, std::string text, Loc loc) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.loc = std::move(loc);
        out.push_back(std::move(t));
    }

    void run() {
        while (!at_end()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                Loc start = here();
                advance();
                advance();
                bool closed = false;
                while (!at_end()) {
                    if (peek() == '*' && peek(1) == '/') {
                        advance();
                        advance();
                        closed = true;
                        break;
                    }
                    advance();
                }
                if (!closed) throw LexError(start, "unterminated block comment");
                continue;
            }
            if (c == '`') {
                throw ParseError(here(),
                                 "preprocessor directive is not supported "
                                 "(macro-free input required)");
            }
            if (c == '"') {
                lex_string();
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                lex_ident();
                continue;
            }
            if (c == '$') {
                Loc loc = here();
                advance();
                std::string name = "$";
                while (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_')
                    name.push_back(advance());
                push(TokKind::SystemName, std::move(name), loc);
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '\'') {
                lex_number();
                continue;
            }
            lex_punct();
        }
        push(TokKind::Eof, "", here());
    }

    void lex_string() {
        Loc start = here();
        advance(); // opening quote
        std::string text;
        while (true) {
            if (at_end() || peek() == '\n')
                throw LexError(start, "unterminated string");
            char c = advance();
            if (c == '"') break;
            if (c == '\\' && !at_end()) c = advance();
            text.push_back(c);
        }
        push(TokKind::String, std::move(text), start);
    }

    void lex_ident() {
        Loc loc = here();
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) ||
               peek() == '_' || peek() == '$')
            name.push_back(advance());
        if (keyword_set().count(name))
            push(TokKind::Keyword, std::move(name), loc);
        else
            push(TokKind::Identifier, std::move(name), loc);
    }

    static bool is_base_digit(char c, char base) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c == '_' || c == 'x' || c == 'z' || c == '?') return true;
        switch (base) {
            case 'b': return c == '0' || c == '1';
            case 'o': return c >= '0' && c <= '7';
            case 'd': return std::isdigit(static_cast<unsigned char>(c));
            case 'h': return std::isxdigit(static_cast<unsigned char>(c));
            default: return false;
        }
    }

    void lex_number() {
        Loc loc = here();
        std::string lead;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')
            lead.push_back(advance());

        Token t;
        t.kind = TokKind::Number;
        t.loc = loc;

        if (peek() == '\'') {
            advance();
            char base = static_cast<char>(
                std::tolower(static_cast<unsigned char>(peek())));
            if (base != 'b' && base != 'o' && base != 'd' && base != 'h')
                throw LexError(here(), "illegal literal base");
            advance();
            std::string digits;
            while (is_base_digit(peek(), base))
                digits.push_back(static_cast<char>(
                    std::tolower(static_cast<unsigned char>(advance()))));
            if (digits.empty())
                throw LexError(here(), "literal has no digits");
            std::string clean;
            for (char d : digits)
                if (d != '_') clean.push_back(d);
            t.number.sized = !lead.empty();
            t.number.width = lead.empty() ? 32 : std::stoi(strip_us(lead));
            t.number.base = base;
            t.number.digits = clean;
            t.number.value = fold_value(clean, base);
        } else {
            std::string clean = strip_us(lead);
            t.number.sized = false;
            t.number.width = 32;
            t.number.base = 'd';
            t.number.digits = clean;
            t.number.value = fold_value(clean, 'd');
        }
        t.text = t.number.digits;
        out.push_back(std::move(t));
    }

    static std::string strip_us(const std::string& s) {
        std::string r;
        for (char c : s)
            if (c != '_') r.push_back(c);
        return r;
    }

    static std::uint64_t fold_value(const std::string& digits, char base) {
        std::uint64_t radix = base == 'b' ? 2 : base == 'o' ? 8
                              : base == 'd' ? 10 : 16;
        std::uint64_t v = 0;
        for (char c : digits) {
            std::uint64_t d = 0;
            if (c >= '0' && c <= '9')
                d = static_cast<std::uint64_t>(c - '0');
            else if (c >= 'a' && c <= 'f')
                d = static_cast<std::uint64_t>(c - 'a' + 10);
            else
                d = 0; // x/z/? collapse to 0
            v = v * radix + d;
        }
        return v;
    }

    void lex_punct() {
        Loc loc = here();
        static const char* two[] = {"==", "!=", "<=", ">=", "<<", ">>",
                                    "&&", "||"};
        char c = peek();
        char n = peek(1);
        for (const char* op : two) {
            if (c == op[0] && n == op[1]) {
                advance();
                advance();
                push(TokKind::Punct, op, loc);
                return;
            }
        }
        static const std::string singles = "~!&|^+-*/%<>?:,;()[]{}=@.#";
        if (singles.find(c) != std::string::npos) {
            advance();
            push(TokKind::Punct, std::string(1, c), loc);
            return;
        }
        throw LexError(loc, std::string("illegal character '") + c + "'");
    }
};

} // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
    Lexer lx(source, file);
    lx.run();
    return std::move(lx.out);
}

} // namespace am::frontend
