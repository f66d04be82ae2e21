#include "am/pipeline/pipeline.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "am/frontend/parser.hpp"
#include "am/miner/emit.hpp"
#include "am/miner/grammar.hpp"
#include "am/miner/mine.hpp"
#include "am/miner/resolve.hpp"
#include "am/specsyn/features.hpp"
#include "am/specsyn/module_spec.hpp"
#include "am/structural/dot.hpp"
#include "am/support/text.hpp"

namespace fs = std::filesystem;

namespace am::pipeline {

using structural::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ToolError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ToolError("cannot write '" + path + "'");
    out << text;
}

void check_config(const PipelineConfig& cfg) {
    if (cfg.rtl_files.empty()) throw ToolError("no RTL files given");
    for (const auto& f : cfg.rtl_files)
        if (!fs::exists(f)) throw ToolError("RTL file not found: " + f);
    if (!cfg.design_spec_path.empty() && !fs::exists(cfg.design_spec_path))
        throw ToolError("design spec not found: " + cfg.design_spec_path);
    if (cfg.last_stage == "analyze") return; // no LLM stages, no templates
    if (!fs::is_directory(cfg.template_dir))
        throw ToolError("template directory not found: " + cfg.template_dir);
    for (const char* t :
         {"spec_prompt.txt", "features_prompt.txt", "mining_prompt.txt"})
        if (!fs::exists(fs::path(cfg.template_dir) / t))
            throw ToolError(std::string("missing template: ") +
                            (fs::path(cfg.template_dir) / t).string());
    if (cfg.gateway.mode == gateway::GatewayMode::Replay &&
        cfg.fixtures_path.empty())
        throw ToolError("replay mode requires --fixtures");
    if (!cfg.fixtures_path.empty() &&
        cfg.gateway.mode == gateway::GatewayMode::Replay &&
        !fs::exists(cfg.fixtures_path))
        throw ToolError("fixtures file not found: " + cfg.fixtures_path);
}

Analysis analyze(const PipelineConfig& cfg, DiagnosticSink& diags) {
    Analysis a;
    frontend::SourceUnit unit = frontend::parse_paths(cfg.rtl_files, diags);
    std::string top = cfg.top;
    if (top.empty()) {
        top = frontend::pick_top(unit);
        diags.warning({}, "no top module given; selected '" + top + "'");
    }
    a.db = frontend::elaborate(std::move(unit), top, diags);
    a.mcg = structural::build_mcg(a.db);
    a.tables = structural::build_io_tables(a.db, diags);
    a.dataflow = structural::build_dataflow(a.db, diags);
    a.full_chains = structural::extract_signal_chains(a.dataflow, a.db,
                                                      cfg.limits);
    a.simplified = structural::simplify_chains(a.full_chains, a.db);
    return a;
}

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string template_path(const PipelineConfig& cfg, const char* name) {
    return (fs::path(cfg.template_dir) / name).string();
}

Json spec_to_json(const specsyn::ModuleSpec& s) {
    Json ports = Json::array();
    for (const auto& [name, desc] : s.ports)
        ports.push_back({{"name", name}, {"description", desc}});
    return Json{{"schema_version", structural::kSchemaVersion},
                {"module", s.module},
                {"overview", s.overview},
                {"ports", ports},
                {"function", s.function_text},
                {"degraded_parse", s.degraded_parse},
                {"provenance",
                 {{"template_id", s.provenance.template_id},
                  {"fingerprint", s.provenance.fingerprint},
                  {"timestamp", s.provenance.timestamp}}}};
}

Json features_to_json(const specsyn::FeatureExtraction& fx) {
    Json items = Json::array();
    for (const auto& f : fx.features)
        items.push_back({{"id", f.id},
                         {"ordinal", f.ordinal},
                         {"statement", f.statement},
                         {"signals", f.signals},
                         {"category", feature_category_name(f.category)}});
    Json dropped = Json::array();
    for (const auto& d : fx.dropped) dropped.push_back(d.str());
    return Json{{"schema_version", structural::kSchemaVersion},
                {"features", items},
                {"dropped", dropped}};
}

Json validation_to_json(const miner::ValidationReport& v) {
    return Json{{"n", v.n},
                {"s", v.s},
                {"resolved", v.resolved},
                {"deduped", v.deduped},
                {"verdicts", v.verdicts}};
}

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

Json to_json(const RunReport& r) {
    Json timings = Json::object();
    for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
    return Json{{"schema_version", structural::kSchemaVersion},
                {"timestamp", r.timestamp},
                {"timings_ms", timings},
                {"stages", r.stages},
                {"artifacts", r.artifacts},
                {"validation", validation_to_json(r.validation)},
                {"diagnostics", r.diagnostics}};
}

void write_analysis_artifacts(const Analysis& a, const PipelineConfig& cfg,
                              RunReport& report) {
    fs::path out(cfg.out_dir);
    auto put = [&](const std::string& name, const std::string& text) {
        write_file((out / name).string(), text);
        report.artifacts[name] = name;
    };
    put("mcg.json", dump(structural::to_json(a.mcg)));
    put("io_tables.json", dump(structural::to_json(a.tables)));
    put("dataflow.json", dump(structural::to_json(a.dataflow)));
    put("chains.json",
        dump(Json{{"schema_version", structural::kSchemaVersion},
                  {"full", structural::to_json(a.full_chains)},
                  {"simplified", structural::to_json(a.simplified)}}));
    put("mcg.dot", structural::export_dot(a.mcg));
    put("dataflow.dot", structural::export_dot(a.dataflow));
}

RunReport run_pipeline(const PipelineConfig& cfg, DiagnosticSink& diags) {
    check_config(cfg);
    const bool replay = cfg.gateway.mode == gateway::GatewayMode::Replay;

    static const std::vector<std::string> kOrder = {"analyze", "specs",
                                                    "features", "mine",
                                                    "emit"};
    auto rank = [&](const std::string& s) {
        for (size_t i = 0; i < kOrder.size(); ++i)
            if (kOrder[i] == s) return i;
        throw ToolError("unknown stage '" + s + "'");
    };
    const size_t limit = rank(cfg.last_stage);
    auto wanted = [&](const char* s) { return rank(s) <= limit; };

    RunReport report;
    report.timestamp = replay ? "" : now_utc();

    auto stage = [&](const std::string& name, auto&& body) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const ToolError& e) {
            throw ToolError("stage '" + name + "': " + e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        // replay runs report zero timings so artifacts stay byte-identical
        report.timings_ms[name] =
            replay ? 0
                   : std::chrono::duration_cast<std::chrono::milliseconds>(
                         t1 - t0)
                         .count();
        report.stages.push_back(name);
    };

    fs::path out(cfg.out_dir);
    auto finalize = [&] {
        for (const auto& d : diags.all())
            report.diagnostics.push_back(d.str());
        write_file((out / "run_report.json").string(),
                   dump(to_json(report)));
        return report;
    };

    Analysis a;
    stage("analyze", [&] {
        a = analyze(cfg, diags);
        write_analysis_artifacts(a, cfg, report);
    });
    if (!wanted("specs")) return finalize();

    if (!replay && cfg.gateway.api_key.empty())
        throw gateway::GatewayError(gateway::GatewayFault::Auth,
                                    "stage 'specs': API key missing (set "
                                    "AM_API_KEY) for live/record mode");

    auto store = std::make_shared<gateway::ReplayStore>();
    if (!cfg.fixtures_path.empty()) store->open(cfg.fixtures_path, replay);
    gateway::Gateway gw(cfg.gateway, store);

    std::string design_spec = cfg.design_spec_path.empty()
                                  ? std::string()
                                  : read_file(cfg.design_spec_path);
    specsyn::PromptBudget budget{cfg.token_budget};

    std::map<std::string, specsyn::ModuleSpec> specs;
    stage("specs", [&] {
        std::string tmpl = read_file(template_path(cfg, "spec_prompt.txt"));
        for (const auto& [module, table] : a.tables) {
            try {
                auto p = specsyn::compose_spec_prompt(
                    module, a.db, a.mcg, table, a.simplified, design_spec,
                    tmpl, budget, diags);
                auto spec = specsyn::generate_module_spec(p, gw, table);
                std::string rel = "specs/" + module + ".json";
                write_file((out / rel).string(), dump(spec_to_json(spec)));
                report.artifacts[rel] = rel;
                specs.emplace(module, std::move(spec));
            } catch (const gateway::GatewayError&) {
                throw;
            } catch (const ToolError& e) {
                diags.error({}, "spec generation for '" + module +
                                    "' failed: " + e.what());
            }
        }
    });
    if (!wanted("features")) return finalize();

    std::map<std::string, specsyn::FeatureExtraction> features;
    stage("features", [&] {
        std::string tmpl =
            read_file(template_path(cfg, "features_prompt.txt"));
        for (const auto& [module, spec] : specs) {
            try {
                auto fx = specsyn::extract_features(spec, a.tables.at(module),
                                                    gw, tmpl);
                std::string rel = "features/" + module + ".json";
                write_file((out / rel).string(), dump(features_to_json(fx)));
                report.artifacts[rel] = rel;
                features.emplace(module, std::move(fx));
            } catch (const gateway::GatewayError&) {
                throw;
            } catch (const ToolError& e) {
                diags.error({}, "feature extraction for '" + module +
                                    "' failed: " + e.what());
            }
        }
    });
    if (!wanted("mine")) return finalize();

    std::vector<miner::DeepAssertion> mined;
    stage("mine", [&] {
        std::string tmpl = read_file(template_path(cfg, "mining_prompt.txt"));
        for (const auto& [module, fx] : features) {
            if (fx.features.empty()) continue;
            try {
                auto p = miner::compose_mining_prompt(
                    fx.features, a.db, a.simplified, a.tables.at(module),
                    tmpl, budget, diags);
                auto batch = miner::mine_assertions(p, gw, module, diags);
                for (auto& m : batch) mined.push_back(std::move(m));
            } catch (const gateway::GatewayError&) {
                throw;
            } catch (const ToolError& e) {
                diags.error({}, "mining for '" + module +
                                    "' failed: " + e.what());
            }
        }
        Json raw = Json::array();
        for (const auto& m : mined)
            raw.push_back({{"module", m.module},
                           {"feature_id", m.feature_id},
                           {"raw", m.raw}});
        write_file((out / "mined.json").string(),
                   dump(Json{{"schema_version", structural::kSchemaVersion},
                             {"assertions", raw}}));
        report.artifacts["mined.json"] = "mined.json";
    });
    if (!wanted("emit")) return finalize();

    stage("validate", [&] {
        for (auto& m : mined) {
            m = miner::validate_syntax(std::move(m));
            m = miner::resolve_signals(std::move(m), a.db, a.tables);
        }
    });

    stage("emit", [&] {
        report.validation =
            miner::emit_sva(mined, (out / "out.sva").string());
        report.artifacts["out.sva"] = "out.sva";
        report.artifacts["out.sva.rejected.txt"] = "out.sva.rejected.txt";
        write_file((out / "validation.json").string(),
                   dump(validation_to_json(report.validation)));
        report.artifacts["validation.json"] = "validation.json";
    });

    return finalize();
}

std::vector<miner::DeepAssertion> load_assertion_file(
    const std::string& path, const std::string& module,
    DiagnosticSink& diags) {
    std::string text = read_file(path);
    std::vector<miner::DeepAssertion> out;
    std::string pending;
    std::string stmt;
    for (const auto& line : split_lines(text)) {
        std::string t = trim(line);
        if (t.rfind("//", 0) == 0) {
            std::string c = to_lower(trim(t.substr(2)));
            // both the miner's and the emitter's tag styles
            if (c.rfind("feature:", 0) == 0)
                pending = trim(trim(t.substr(2)).substr(8));
            else if (c.rfind("source:", 0) == 0)
                pending = trim(trim(t.substr(2)).substr(7));
            continue;
        }
        if (t.empty()) continue;
        stmt += (stmt.empty() ? "" : " ") + t;
        if (stmt.back() == ';') {
            miner::DeepAssertion a;
            a.raw = stmt;
            a.module = module;
            a.feature_id = pending;
            out.push_back(std::move(a));
            stmt.clear();
            pending.clear();
        }
    }
    if (!trim(stmt).empty()) {
        diags.warning({}, "trailing unterminated statement in '" + path +
                              "' kept as a raw assertion");
        miner::DeepAssertion a;
        a.raw = stmt;
        a.module = module;
        a.feature_id = pending;
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace am::pipeline
