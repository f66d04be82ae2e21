#pragma once

#include <string>

#include "am/structural/dataflow.hpp"
#include "am/structural/mcg.hpp"

namespace am::structural {

// Deterministic DOT renderings; node identifiers are quoted and escaped.
std::string export_dot(const ModuleCallGraph& g);
std::string export_dot(const DataflowGraph& g);

} // namespace am::structural
