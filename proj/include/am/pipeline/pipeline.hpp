#pragma once

#include <map>
#include <string>
#include <vector>

#include "am/gateway/client.hpp"
#include "am/miner/assertion.hpp"
#include "am/specsyn/prompt_builder.hpp"
#include "am/structural/chains.hpp"
#include "am/structural/json_io.hpp"

namespace am::pipeline {

struct PipelineConfig {
    std::vector<std::string> rtl_files;
    std::string top;              // empty: auto-pick
    std::string design_spec_path; // optional design-spec excerpt
    std::string template_dir = "templates";
    std::string fixtures_path;    // replay store (required in replay mode)
    std::string out_dir = "out";
    gateway::GatewayConfig gateway;
    structural::ChainLimits limits;
    size_t token_budget = 8000;
    // last stage to run: analyze | specs | features | mine | emit
    std::string last_stage = "emit";
};

// Eager existence check of every referenced path. Throws ToolError.
void check_config(const PipelineConfig& cfg);

// Everything the structural stage produces, kept in memory for later
// stages.
struct Analysis {
    frontend::DesignDB db;
    structural::ModuleCallGraph mcg;
    std::map<std::string, structural::IoTable> tables;
    structural::DataflowGraph dataflow;
    structural::ChainSet full_chains;
    structural::ChainSet simplified;
};

Analysis analyze(const PipelineConfig& cfg, DiagnosticSink& diags);

struct RunReport {
    std::string timestamp;             // empty in replay mode
    std::map<std::string, long> timings_ms; // zeroed in replay mode
    std::vector<std::string> stages;   // completed, in order
    std::map<std::string, std::string> artifacts; // name -> relative path
    miner::ValidationReport validation;
    std::vector<std::string> diagnostics;
};

structural::Json to_json(const RunReport& r);

// Writes mcg.json, io_tables.json, dataflow.json, chains.json, and the two
// DOT files under cfg.out_dir; records them in the report index.
void write_analysis_artifacts(const Analysis& a, const PipelineConfig& cfg,
                              RunReport& report);

// Full run: analyze -> specs -> features -> mine -> validate -> emit.
// Artifacts are persisted as each stage finishes, so a failing stage leaves
// everything before it on disk; failures rethrow with the stage name
// prefixed. The returned report is also written to out_dir/run_report.json.
RunReport run_pipeline(const PipelineConfig& cfg, DiagnosticSink& diags);

// Reads `path` and splits it into raw assertion candidates (standalone
// `validate` subcommand input). `// source:` comments tag the following
// statement.
std::vector<miner::DeepAssertion> load_assertion_file(
    const std::string& path, const std::string& module, DiagnosticSink& diags);

std::string read_file(const std::string& path); // throws ToolError
void write_file(const std::string& path, const std::string& text);

} // namespace am::pipeline
