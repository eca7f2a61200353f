#include "abstain/oracle.hpp"

#include <chrono>
#include <cmath>
#include <semaphore>
#include <set>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "abstain/text.hpp"

namespace abstain {

bool ExactOracle::judge(const std::string& premise, const std::string& hypothesis) const {
    return text::normalize(premise) == text::normalize(hypothesis);
}

namespace {

std::set<std::string> token_set(const std::string& s) {
    std::set<std::string> tokens;
    std::string current;
    for (char c : s) {
        if (text::is_word_byte(static_cast<unsigned char>(c))) {
            current.push_back(text::lower(c));
        } else if (!current.empty()) {
            tokens.insert(current);
            current.clear();
        }
    }
    if (!current.empty()) tokens.insert(current);
    return tokens;
}

}  // namespace

bool JaccardOracle::judge(const std::string& premise, const std::string& hypothesis) const {
    std::set<std::string> a = token_set(premise);
    std::set<std::string> b = token_set(hypothesis);
    if (a.empty() && b.empty()) return true;
    size_t intersection = 0;
    for (const auto& t : a) intersection += b.count(t);
    size_t unions = a.size() + b.size() - intersection;
    double jaccard = unions == 0 ? 1.0 : static_cast<double>(intersection) / static_cast<double>(unions);
    return jaccard >= threshold_;
}

struct RemoteNliOracle::Impl {
    RemoteOracleConfig config;
    std::string host;   // scheme://host:port
    std::string path;
    mutable std::counting_semaphore<256> in_flight{1};

    explicit Impl(RemoteOracleConfig cfg) : config(std::move(cfg)) {
        size_t scheme = config.url.find("://");
        size_t path_start = scheme == std::string::npos
                                ? config.url.find('/')
                                : config.url.find('/', scheme + 3);
        if (path_start == std::string::npos) {
            host = config.url;
            path = "/";
        } else {
            host = config.url.substr(0, path_start);
            path = config.url.substr(path_start);
        }
        int slots = std::max(1, config.max_in_flight);
        in_flight.release(slots - 1);
    }
};

RemoteNliOracle::RemoteNliOracle(RemoteOracleConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

RemoteNliOracle::~RemoteNliOracle() = default;

bool RemoteNliOracle::judge(const std::string& premise, const std::string& hypothesis) const {
    impl_->in_flight.acquire();
    struct Release {
        Impl* impl;
        ~Release() { impl->in_flight.release(); }
    } release{impl_.get()};

    nlohmann::json body{{"premise", premise}, {"hypothesis", hypothesis}};
    const std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= impl_->config.retries; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(std::chrono::milliseconds(100 << (attempt - 1)));

        httplib::Client client(impl_->host);
        auto seconds = std::chrono::duration<double>(impl_->config.timeout_seconds);
        client.set_connection_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(seconds));
        client.set_read_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(seconds));

        auto res = client.Post(impl_->path, payload, "application/json");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            last_error = "HTTP status " + std::to_string(res->status);
            continue;
        }
        nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.is_object() || !reply.contains("entailment") ||
            !reply.contains("neutral") || !reply.contains("contradiction") ||
            !reply["entailment"].is_number()) {
            throw OracleError(name(), "malformed response body");
        }
        double entailment = reply["entailment"].get<double>();
        double neutral = reply["neutral"].get<double>();
        double contradiction = reply["contradiction"].get<double>();
        if (impl_->config.entailment_threshold)
            return entailment >= *impl_->config.entailment_threshold;
        return entailment >= neutral && entailment >= contradiction;
    }
    throw OracleError(name(), last_error.empty() ? "request failed" : last_error);
}

std::shared_ptr<EntailmentOracle> make_oracle(const std::string& backend,
                                              double jaccard_threshold,
                                              const std::string& nli_url) {
    if (backend == "exact") return std::make_shared<ExactOracle>();
    if (backend == "jaccard") return std::make_shared<JaccardOracle>(jaccard_threshold);
    if (backend == "remote") {
        if (nli_url.empty())
            throw OracleError("remote", "no endpoint configured (flag --nli-url or env ABSTAIN_GATE_NLI_URL)");
        RemoteOracleConfig config;
        config.url = nli_url;
        return std::make_shared<RemoteNliOracle>(std::move(config));
    }
    throw OracleError(backend, "unknown backend");
}

}  // namespace abstain
