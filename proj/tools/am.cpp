// assertion-mining toolchain driver
#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "am/miner/emit.hpp"
#include "am/miner/grammar.hpp"
#include "am/miner/resolve.hpp"
#include "am/pipeline/pipeline.hpp"
#include "am/specsyn/similarity.hpp"

namespace fs = std::filesystem;
using namespace am;

namespace {

struct Options {
    pipeline::PipelineConfig cfg;
    std::string config_path;
    std::string mode = "replay";
    std::string module;     // stability target
    std::string sva_path;   // validate input
    int k = 5;              // stability regenerations
};

void load_config_file(Options& o) {
    if (o.config_path.empty()) return;
    auto j = structural::Json::parse(pipeline::read_file(o.config_path));
    auto get = [&](const char* key, auto& slot) {
        if (j.contains(key)) slot = j[key].template get<std::decay_t<decltype(slot)>>();
    };
    get("rtl_files", o.cfg.rtl_files);
    get("top", o.cfg.top);
    get("spec", o.cfg.design_spec_path);
    get("templates", o.cfg.template_dir);
    get("fixtures", o.cfg.fixtures_path);
    get("out", o.cfg.out_dir);
    get("mode", o.mode);
    get("endpoint", o.cfg.gateway.endpoint);
    get("model", o.cfg.gateway.model);
    get("max_chains", o.cfg.limits.max_chains_per_output);
    get("max_chain_len", o.cfg.limits.max_chain_len);
    get("token_budget", o.cfg.token_budget);
}

void finish_config(Options& o) {
    o.cfg.gateway.mode = gateway::parse_mode(o.mode);
    if (const char* key = std::getenv("AM_API_KEY"))
        o.cfg.gateway.api_key = key;
}

void print_report(const pipeline::RunReport& r) {
    std::cout << "stages:";
    for (const auto& s : r.stages) std::cout << ' ' << s;
    std::cout << "\nartifacts: " << r.artifacts.size()
              << "\nassertions: N=" << r.validation.n
              << " S=" << r.validation.s
              << " resolved=" << r.validation.resolved
              << " deduped=" << r.validation.deduped << '\n';
}

int run_stages(Options& o, const std::string& last) {
    o.cfg.last_stage = last;
    DiagnosticSink diags;
    try {
        auto report = pipeline::run_pipeline(o.cfg, diags);
        diags.print(std::cerr);
        print_report(report);
        return diags.has_errors() ? 1 : 0;
    } catch (const ToolError& e) {
        diags.print(std::cerr);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int run_validate(Options& o) {
    DiagnosticSink diags;
    try {
        auto a = pipeline::analyze(o.cfg, diags);
        auto assertions =
            pipeline::load_assertion_file(o.sva_path, a.db.top, diags);
        for (auto& m : assertions) {
            m = miner::validate_syntax(std::move(m));
            m = miner::resolve_signals(std::move(m), a.db, a.tables);
        }
        auto report = miner::build_report(assertions);
        std::cout << "N=" << report.n << " S=" << report.s
                  << " resolved=" << report.resolved << '\n';
        for (const auto& v : report.verdicts) std::cout << "  " << v << '\n';
        for (const auto& m : assertions)
            for (const auto& d : m.diagnostics)
                if (d.severity == Severity::Error)
                    std::cerr << d.str() << '\n';
        diags.print(std::cerr);
        return diags.has_errors() ? 1 : 0;
    } catch (const ToolError& e) {
        diags.print(std::cerr);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int run_stability(Options& o) {
    DiagnosticSink diags;
    try {
        pipeline::check_config(o.cfg);
        auto a = pipeline::analyze(o.cfg, diags);
        std::string module = o.module.empty() ? a.db.top : o.module;
        auto it = a.tables.find(module);
        if (it == a.tables.end())
            throw ToolError("no such module: " + module);
        std::string design_spec =
            o.cfg.design_spec_path.empty()
                ? std::string()
                : pipeline::read_file(o.cfg.design_spec_path);
        std::string tmpl = pipeline::read_file(
            (fs::path(o.cfg.template_dir) / "spec_prompt.txt").string());
        auto p = specsyn::compose_spec_prompt(
            module, a.db, a.mcg, it->second, a.simplified, design_spec, tmpl,
            specsyn::PromptBudget{o.cfg.token_budget}, diags);

        auto store = std::make_shared<gateway::ReplayStore>();
        if (!o.cfg.fixtures_path.empty())
            store->open(o.cfg.fixtures_path,
                        o.cfg.gateway.mode == gateway::GatewayMode::Replay);
        gateway::Gateway gw(o.cfg.gateway, store);

        auto rep = specsyn::stability_run(p, o.k, gw);
        structural::Json matrix = structural::Json::array();
        for (const auto& row : rep.matrix) matrix.push_back(row);
        structural::Json j = {{"schema_version", structural::kSchemaVersion},
                              {"module", module},
                              {"k", rep.k},
                              {"matrix", matrix},
                              {"mean", rep.mean}};
        pipeline::write_file(
            (fs::path(o.cfg.out_dir) / "stability.json").string(),
            j.dump(2) + "\n");
        std::cout << "k=" << rep.k << " mean=" << rep.mean << '\n';
        diags.print(std::cerr);
        return diags.has_errors() ? 1 : 0;
    } catch (const ToolError& e) {
        diags.print(std::cerr);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RTL structural analysis and LLM assertion mining"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--config", o.config_path, "JSON config file")
        ->check(CLI::ExistingFile);
    app.add_option("--top", o.cfg.top, "top module (auto-picked if omitted)");
    app.add_option("--spec", o.cfg.design_spec_path, "design-spec text file");
    app.add_option("--templates", o.cfg.template_dir, "prompt template dir");
    app.add_option("--mode", o.mode, "gateway mode")
        ->check(CLI::IsMember({"live", "record", "replay"}));
    app.add_option("--fixtures", o.cfg.fixtures_path, "replay fixture file");
    app.add_option("--out", o.cfg.out_dir, "output directory");
    app.add_option("--max-chains", o.cfg.limits.max_chains_per_output,
                   "chain cap per output");
    app.add_option("--max-chain-len", o.cfg.limits.max_chain_len,
                   "chain length cap");
    app.add_option("--token-budget", o.cfg.token_budget,
                   "approximate prompt token budget");
    app.add_option("--endpoint", o.cfg.gateway.endpoint, "chat API base URL");
    app.add_option("--model", o.cfg.gateway.model, "chat model name");

    auto add_rtl = [&](CLI::App* sub) {
        sub->fallthrough(); // global flags may follow the subcommand
        sub->add_option("rtl", o.cfg.rtl_files, "Verilog source files");
    };
    add_rtl(app.add_subcommand("analyze", "structural artifacts only"));
    add_rtl(app.add_subcommand("spec", "analyze + module specifications"));
    add_rtl(app.add_subcommand("features", "spec + feature decomposition"));
    add_rtl(app.add_subcommand("mine", "features + raw assertion mining"));
    add_rtl(app.add_subcommand("pipeline", "full run through emission"));

    auto* validate =
        app.add_subcommand("validate", "check an external assertion file");
    validate->add_option("sva", o.sva_path, "assertion file")
        ->required()
        ->check(CLI::ExistingFile);
    add_rtl(validate);

    auto* stability =
        app.add_subcommand("stability", "regeneration similarity protocol");
    add_rtl(stability);
    stability->add_option("--module", o.module, "module to regenerate");
    stability->add_option("-k,--runs", o.k, "number of regenerations")
        ->check(CLI::Range(2, 64));

    CLI11_PARSE(app, argc, argv);

    try {
        // config file first, then flags re-applied on top
        if (!o.config_path.empty()) {
            Options base;
            base.config_path = o.config_path;
            load_config_file(base);
            if (o.cfg.rtl_files.empty()) o.cfg.rtl_files = base.cfg.rtl_files;
            if (app.count("--top") == 0) o.cfg.top = base.cfg.top;
            if (app.count("--spec") == 0)
                o.cfg.design_spec_path = base.cfg.design_spec_path;
            if (app.count("--templates") == 0)
                o.cfg.template_dir = base.cfg.template_dir;
            if (app.count("--mode") == 0) o.mode = base.mode;
            if (app.count("--fixtures") == 0)
                o.cfg.fixtures_path = base.cfg.fixtures_path;
            if (app.count("--out") == 0) o.cfg.out_dir = base.cfg.out_dir;
            if (app.count("--max-chains") == 0)
                o.cfg.limits.max_chains_per_output =
                    base.cfg.limits.max_chains_per_output;
            if (app.count("--max-chain-len") == 0)
                o.cfg.limits.max_chain_len = base.cfg.limits.max_chain_len;
            if (app.count("--token-budget") == 0)
                o.cfg.token_budget = base.cfg.token_budget;
            if (app.count("--endpoint") == 0)
                o.cfg.gateway.endpoint = base.cfg.gateway.endpoint;
            if (app.count("--model") == 0)
                o.cfg.gateway.model = base.cfg.gateway.model;
        }
        finish_config(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (app.got_subcommand("analyze")) return run_stages(o, "analyze");
    if (app.got_subcommand("spec")) return run_stages(o, "specs");
    if (app.got_subcommand("features")) return run_stages(o, "features");
    if (app.got_subcommand("mine")) return run_stages(o, "mine");
    if (app.got_subcommand("pipeline")) return run_stages(o, "emit");
    if (app.got_subcommand("validate")) return run_validate(o);
    if (app.got_subcommand("stability")) return run_stability(o);
    return 1;
}
