#pragma once

#include <string>

#include "am/frontend/ast.hpp"

namespace am::frontend {

// Pretty-prints a parsed unit back to parseable source. Output formatting is
// canonical, not a reproduction of the input.
std::string print_unit(const SourceUnit& unit);
std::string print_module(const ModuleDecl& m);
std::string print_expr(const Expr& e);

} // namespace am::frontend
