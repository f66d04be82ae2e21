#pragma once

#include <memory>
#include <string>

#include "am/gateway/prompt.hpp"
#include "am/gateway/replay.hpp"

namespace am::gateway {

enum class GatewayFault { Network, Auth, RateLimitExhausted, ReplayMiss };

struct GatewayError : ToolError {
    GatewayFault fault;
    GatewayError(GatewayFault f, const std::string& msg)
        : ToolError(msg), fault(f) {}
};

struct GatewayConfig {
    GatewayMode mode = GatewayMode::Replay;
    std::string endpoint = "https://api.openai.com"; // base URL
    std::string chat_path = "/v1/chat/completions";
    std::string model = "gpt-4o";
    std::string api_key;       // from the environment, live/record only
    int max_retries = 3;
    int retry_base_ms = 250;
    int max_in_flight = 4;
};

// Chat-completion access with record/replay. Shareable across threads;
// concurrent in-flight requests are capped at max_in_flight.
class Gateway {
public:
    Gateway(GatewayConfig config, std::shared_ptr<ReplayStore> store);

    // Live/record: one HTTP chat-completion call with bounded retries on
    // transport, 429, and 5xx failures. Record additionally persists the
    // response. Replay: the stored completion, byte-identical, no network.
    Completion complete(const Prompt& p, int run_index = 0);

    const GatewayConfig& config() const { return config_; }

private:
    Completion live_call(const Prompt& p);

    GatewayConfig config_;
    std::shared_ptr<ReplayStore> store_;
    struct Slots;
    std::shared_ptr<Slots> slots_;
};

} // namespace am::gateway
