#pragma once

#include <string>
#include <vector>

#include "am/frontend/elaborate.hpp"

namespace am::structural {

struct McgNode {
    std::string name;
    bool external = false; // blackbox
};

struct McgEdge {
    std::string parent;
    std::string child;
    std::string instance;
};

// Nodes are module definitions reachable from the top, edges mirror
// InstanceDecls one-to-one. Always acyclic (elaboration rejects cycles).
struct ModuleCallGraph {
    std::vector<McgNode> nodes; // sorted by name
    std::vector<McgEdge> edges; // sorted (parent, child, instance)
};

ModuleCallGraph build_mcg(const frontend::DesignDB& db);

} // namespace am::structural
