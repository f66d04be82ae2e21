#pragma once

#include <map>
#include <string>
#include <vector>

#include "am/structural/dataflow.hpp"
#include "am/structural/io_table.hpp"

namespace am::structural {

struct ChainLimits {
    int max_chains_per_output = 64;
    int max_chain_len = 64;
    bool include_control = true;
};

enum class ChainKind { Full, Simplified };

struct SignalChain {
    std::string sink;                 // the output this chain was traced for
    std::vector<std::string> signals; // source-to-sink order
    ChainKind kind = ChainKind::Full;
};

struct ChainSet {
    struct PerOutput {
        std::string output;
        bool truncated = false;
        std::vector<SignalChain> chains;
    };
    std::vector<PerOutput> outputs; // sorted by output name
    ChainLimits limits;

    std::vector<SignalChain> flatten() const;
};

// Backward depth-first traversal from every top-level output and every
// module-instance output port. Paths run source-to-sink; each signal is
// visited at most once per path (cycles cut); enumeration is truncated at
// the limits with a per-output flag; successor expansion is lexicographic.
ChainSet extract_signal_chains(const DataflowGraph& g,
                               const frontend::DesignDB& db,
                               const ChainLimits& limits);

// Keeps only elements that are ports of their instance (or top-level
// ports), deduplicates, drops empties.
ChainSet simplify_chains(const ChainSet& full, const frontend::DesignDB& db);

// "path.sig" -> true if sig is a port of the module instantiated at path.
bool is_port_node(const frontend::DesignDB& db, const std::string& node);

std::string render_chain(const SignalChain& c);

} // namespace am::structural
