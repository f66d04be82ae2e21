#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "am/gateway/prompt.hpp"

namespace am::gateway {

enum class GatewayMode { Live, Record, Replay };

GatewayMode parse_mode(const std::string& s); // throws ToolError

// JSON-lines store of recorded completions keyed by prompt fingerprint.
// Internally synchronized; replay mode never touches the network.
class ReplayStore {
public:
    ReplayStore() = default;

    // Loads existing fixtures (missing file is fine in record mode).
    void open(const std::string& path, bool must_exist);

    std::optional<Completion> lookup(const std::string& fp) const;

    // Persists immediately when a backing file is open.
    void put(const std::string& fp, const std::string& template_id,
             const Prompt& p, const Completion& c);

    size_t size() const;

private:
    mutable std::mutex mu_;
    std::string path_;
    std::map<std::string, Completion> entries_;
};

} // namespace am::gateway
