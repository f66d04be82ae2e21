#include "am/structural/dot.hpp"

#include <sstream>

namespace am::structural {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string export_dot(const ModuleCallGraph& g) {
    std::ostringstream os;
    os << "digraph mcg {\n";
    for (const auto& n : g.nodes) {
        os << "  " << quote(n.name);
        if (n.external) os << " [shape=box, style=dashed, label=" <<
            quote(n.name + " (external)") << "]";
        os << ";\n";
    }
    for (const auto& e : g.edges)
        os << "  " << quote(e.parent) << " -> " << quote(e.child)
           << " [label=" << quote(e.instance) << "];\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const DataflowGraph& g) {
    std::ostringstream os;
    os << "digraph dataflow {\n";
    for (const auto& n : g.nodes) os << "  " << quote(n) << ";\n";
    for (const auto& e : g.edges)
        os << "  " << quote(e.src) << " -> " << quote(e.dst)
           << " [kind=" << quote(edge_kind_name(e.kind)) << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace am::structural
