#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "am/frontend/ast.hpp"
#include "am/support/diagnostics.hpp"

namespace am::frontend {

enum class TokKind {
    Identifier,
    SystemName, // $display etc., only legal inside skipped regions
    Number,
    String,
    Keyword,
    Punct, // operators and punctuation; `text` holds the spelling
    Eof
};

struct Token {
    TokKind kind = TokKind::Eof;
    std::string text;
    Number number; // valid when kind == Number
    Loc loc;

    bool is_kw(std::string_view kw) const {
        return kind == TokKind::Keyword && text == kw;
    }
    bool is_punct(std::string_view p) const {
        return kind == TokKind::Punct && text == p;
    }
};

// Lexes one file. Comments are stripped; every token carries a location.
// Throws LexError on an unterminated block comment, unterminated string,
// or an illegal character.
std::vector<Token> tokenize(std::string_view source, const std::string& file);

} // namespace am::frontend
