#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "am/frontend/elaborate.hpp"
#include "am/support/diagnostics.hpp"

namespace am::structural {

enum class EdgeKind { Continuous, Blocking, Nonblocking, Port, Control };

const char* edge_kind_name(EdgeKind k);

struct DataflowEdge {
    std::string src; // hierarchical: <instance path>.<signal>
    std::string dst;
    EdgeKind kind = EdgeKind::Continuous;
    Loc loc;
};

// Signal-dependency graph at whole-signal granularity (bit and part
// selects collapse to the parent vector).
struct DataflowGraph {
    std::set<std::string> nodes;
    std::vector<DataflowEdge> edges; // sorted (src, dst, kind, loc)

    // src -> sorted unique (dst, kind); built on demand by chains
    std::vector<std::string> predecessors(const std::string& node,
                                          bool include_control) const;
    bool has_edge(const std::string& src, const std::string& dst) const;
};

// Edges per assignment from RHS signals to the LHS target; `control` edges
// from if/case guard signals; `port` edges across instance boundaries in
// the direction of the formal port. Signals appearing only in event
// controls (posedge/negedge lists) are not dataflow sources. Combinational
// loops (cycles with no nonblocking edge) are reported as diagnostics.
DataflowGraph build_dataflow(const frontend::DesignDB& db,
                             DiagnosticSink& diags);

} // namespace am::structural
