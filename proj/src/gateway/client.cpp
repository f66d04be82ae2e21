#include "am/gateway/client.hpp"

#include <chrono>
#include <condition_variable>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

namespace am::gateway {

// counting semaphore for the in-flight cap
struct Gateway::Slots {
    std::mutex mu;
    std::condition_variable cv;
    int available;

    explicit Slots(int n) : available(n) {}

    void acquire() {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return available > 0; });
        --available;
    }
    void release() {
        {
            std::lock_guard lock(mu);
            ++available;
        }
        cv.notify_one();
    }
};

Gateway::Gateway(GatewayConfig config, std::shared_ptr<ReplayStore> store)
    : config_(std::move(config)),
      store_(std::move(store)),
      slots_(std::make_shared<Slots>(std::max(1, config_.max_in_flight))) {}

Completion Gateway::complete(const Prompt& p, int run_index) {
    std::string fp = fingerprint(p, run_index);

    if (config_.mode == GatewayMode::Replay) {
        auto hit = store_->lookup(fp);
        if (!hit)
            throw GatewayError(GatewayFault::ReplayMiss,
                               "replay miss: fingerprint " + fp +
                                   " (template '" + p.template_id +
                                   "') not found in fixtures");
        return *hit;
    }

    if (config_.api_key.empty())
        throw GatewayError(GatewayFault::Auth,
                           "no API key configured (set the AM_API_KEY "
                           "environment variable)");

    slots_->acquire();
    Completion c;
    try {
        c = live_call(p);
    } catch (...) {
        slots_->release();
        throw;
    }
    slots_->release();

    if (config_.mode == GatewayMode::Record)
        store_->put(fp, p.template_id, p, c);
    return c;
}

Completion Gateway::live_call(const Prompt& p) {
    nlohmann::json body;
    body["model"] = config_.model;
    body["temperature"] = p.temperature;
    body["max_tokens"] = p.max_tokens;
    body["messages"] = nlohmann::json::array(
        {{{"role", "system"}, {"content", p.system}},
         {{"role", "user"}, {"content", p.user}}});
    std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(std::chrono::milliseconds(
                config_.retry_base_ms * (1 << (attempt - 1))));

        httplib::Client cli(config_.endpoint);
        cli.set_connection_timeout(30);
        cli.set_read_timeout(120);
        httplib::Headers headers = {
            {"Authorization", "Bearer " + config_.api_key}};
        auto res = cli.Post(config_.chat_path, headers, payload,
                            "application/json");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status == 401 || res->status == 403)
            throw GatewayError(GatewayFault::Auth,
                               "authentication rejected (HTTP " +
                                   std::to_string(res->status) + ")");
        if (res->status == 429 || res->status >= 500) {
            last_error = "HTTP " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200)
            throw GatewayError(GatewayFault::Network,
                               "unexpected HTTP " +
                                   std::to_string(res->status) + ": " +
                                   res->body);

        nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
        if (j.is_discarded() || !j.contains("choices") || j["choices"].empty())
            throw GatewayError(GatewayFault::Network,
                               "malformed completion response");
        const auto& choice = j["choices"][0];
        Completion c;
        c.text = choice["message"].value("content", "");
        c.finish_reason = choice.value("finish_reason", "stop");
        if (j.contains("usage")) {
            c.prompt_tokens = j["usage"].value("prompt_tokens", 0);
            c.completion_tokens = j["usage"].value("completion_tokens", 0);
        }
        c.provider = j.value("model", config_.model);
        return c;
    }
    throw GatewayError(GatewayFault::RateLimitExhausted,
                       "retries exhausted: " + last_error);
}

} // namespace am::gateway
