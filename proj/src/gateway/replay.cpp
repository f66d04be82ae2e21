#include "am/gateway/replay.hpp"

#include <fstream>
#include <json.hpp>

#include "am/support/text.hpp"

namespace am::gateway {

GatewayMode parse_mode(const std::string& s) {
    if (s == "live") return GatewayMode::Live;
    if (s == "record") return GatewayMode::Record;
    if (s == "replay") return GatewayMode::Replay;
    throw ToolError("unknown gateway mode '" + s +
                    "' (expected live, record, or replay)");
}

void ReplayStore::open(const std::string& path, bool must_exist) {
    std::lock_guard lock(mu_);
    path_ = path;
    std::ifstream in(path);
    if (!in) {
        if (must_exist) throw ToolError("cannot open fixtures file: " + path);
        return;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("fingerprint"))
            throw ToolError("malformed fixture at " + path + ":" +
                            std::to_string(lineno));
        Completion c;
        c.text = j.value("text", "");
        c.finish_reason = j.value("finish_reason", "stop");
        c.prompt_tokens = j.value("prompt_tokens", 0);
        c.completion_tokens = j.value("completion_tokens", 0);
        c.provider = "replay";
        entries_[j["fingerprint"].get<std::string>()] = std::move(c);
    }
}

std::optional<Completion> ReplayStore::lookup(const std::string& fp) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(fp);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ReplayStore::put(const std::string& fp, const std::string& template_id,
                      const Prompt& p, const Completion& c) {
    std::lock_guard lock(mu_);
    entries_[fp] = c;
    if (path_.empty()) return;
    nlohmann::ordered_json j;
    j["fingerprint"] = fp;
    j["template_id"] = template_id;
    j["system_digest"] = hex64(fnv1a64(p.system));
    j["user_digest"] = hex64(fnv1a64(p.user));
    j["text"] = c.text;
    j["finish_reason"] = c.finish_reason;
    j["prompt_tokens"] = c.prompt_tokens;
    j["completion_tokens"] = c.completion_tokens;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw ToolError("cannot write fixtures file: " + path_);
    out << j.dump() << '\n';
}

size_t ReplayStore::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

} // namespace am::gateway
