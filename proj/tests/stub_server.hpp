#pragma once

// in-process OpenAI-style chat stub shared by the LLM-facing test suites.
// The define must match the gateway client's build flags, or the inline
// httplib definitions violate the ODR.
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <functional>
#include <string>
#include <thread>

namespace am::test {

class StubServer {
public:
    // handler: (user content, call index) -> completion text
    using Handler = std::function<std::string(const std::string&, int)>;

    explicit StubServer(Handler h, int fail_first = 0)
        : handler_(std::move(h)), fail_first_(fail_first) {
        srv_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
            int n = calls_++;
            if (n < fail_first_) {
                res.status = 500;
                return;
            }
            auto j = nlohmann::json::parse(req.body);
            std::string user = j["messages"][1]["content"];
            nlohmann::json out = {
                {"model", "stub"},
                {"choices",
                 {{{"message", {{"content", handler_(user, n)}}},
                   {"finish_reason", "stop"}}}},
                {"usage", {{"prompt_tokens", 7}, {"completion_tokens", 9}}}};
            res.set_content(out.dump(), "application/json");
        });
        port_ = srv_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { srv_.listen_after_bind(); });
        srv_.wait_until_ready();
    }
    ~StubServer() {
        srv_.stop();
        thread_.join();
    }

    std::string endpoint() const {
        return "http://127.0.0.1:" + std::to_string(port_);
    }
    int calls() const { return calls_; }

private:
    httplib::Server srv_;
    Handler handler_;
    int fail_first_;
    std::atomic<int> calls_{0};
    int port_ = 0;
    std::thread thread_;
};

} // namespace am::test
