#include "am/structural/json_io.hpp"

namespace am::structural {

Json to_json(const ModuleCallGraph& g) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["nodes"] = Json::array();
    for (const auto& n : g.nodes)
        j["nodes"].push_back({{"name", n.name}, {"external", n.external}});
    j["edges"] = Json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"parent", e.parent},
                              {"child", e.child},
                              {"instance", e.instance}});
    return j;
}

Json to_json(const std::map<std::string, IoTable>& tables) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["modules"] = Json::array();
    for (const auto& [name, t] : tables) {
        Json m;
        m["module"] = name;
        m["rows"] = Json::array();
        for (const auto& r : t.rows)
            m["rows"].push_back({{"name", r.name},
                                 {"direction", frontend::port_dir_name(r.dir)},
                                 {"width", r.width},
                                 {"connections", r.connections}});
        j["modules"].push_back(std::move(m));
    }
    return j;
}

Json to_json(const DataflowGraph& g) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["nodes"] = std::vector<std::string>(g.nodes.begin(), g.nodes.end());
    j["edges"] = Json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"src", e.src},
                              {"dst", e.dst},
                              {"kind", edge_kind_name(e.kind)},
                              {"loc", e.loc.str()}});
    return j;
}

Json to_json(const ChainSet& chains) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["limits"] = {{"max_chains_per_output", chains.limits.max_chains_per_output},
                   {"max_chain_len", chains.limits.max_chain_len},
                   {"include_control", chains.limits.include_control}};
    j["outputs"] = Json::array();
    for (const auto& po : chains.outputs) {
        Json o;
        o["output"] = po.output;
        o["truncated"] = po.truncated;
        o["kind"] = po.chains.empty() ? "full"
                    : po.chains.front().kind == ChainKind::Full ? "full"
                                                                : "simplified";
        o["chains"] = Json::array();
        for (const auto& c : po.chains) o["chains"].push_back(c.signals);
        j["outputs"].push_back(std::move(o));
    }
    return j;
}

} // namespace am::structural
