#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "am/structural/chains.hpp"
#include "am/structural/dataflow.hpp"
#include "am/structural/io_table.hpp"
#include "am/structural/mcg.hpp"

namespace am::structural {

// Stable key ordering across all emitted artifacts.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const ModuleCallGraph& g);
Json to_json(const std::map<std::string, IoTable>& tables);
Json to_json(const DataflowGraph& g);
Json to_json(const ChainSet& chains);

} // namespace am::structural
