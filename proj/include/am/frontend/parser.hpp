#pragma once

#include <string>
#include <vector>

#include "am/frontend/ast.hpp"
#include "am/frontend/lexer.hpp"
#include "am/support/diagnostics.hpp"

namespace am::frontend {

// Parses one token stream (from a single file) and appends module
// declarations to `unit`. Throws ParseError on any construct outside the
// supported subset; `initial` blocks are skipped with a warning.
void parse_tokens(const std::vector<Token>& tokens, SourceUnit& unit,
                  DiagnosticSink& diags);

// Convenience: tokenize + parse a set of in-memory files.
SourceUnit parse_files(
    const std::vector<std::pair<std::string, std::string>>& files,
    DiagnosticSink& diags);

// Loads the listed paths from disk and parses them.
SourceUnit parse_paths(const std::vector<std::string>& paths,
                       DiagnosticSink& diags);

} // namespace am::frontend
