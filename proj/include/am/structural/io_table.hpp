#pragma once

#include <map>
#include <string>
#include <vector>

#include "am/frontend/elaborate.hpp"
#include "am/support/diagnostics.hpp"

namespace am::structural {

struct IoRow {
    std::string name;
    frontend::PortDir dir = frontend::PortDir::Input;
    int width = 1;
    // Hierarchical endpoints this port connects to, across every instance
    // of the module. `primary` for top-level ports.
    std::vector<std::string> connections;
};

struct IoTable {
    std::string module;
    std::vector<IoRow> rows; // declaration order
};

// One table per non-blackbox module reachable from the top. Unconnected
// ports get an empty connection list and a warning diagnostic.
std::map<std::string, IoTable> build_io_tables(const frontend::DesignDB& db,
                                               DiagnosticSink& diags);

// Plain-text rendering used in LLM prompts.
std::string render_io_table(const IoTable& table);

} // namespace am::structural
