#include "abstain/gateway.hpp"

#include <thread>

#include <httplib.h>

namespace abstain {

struct Gateway::Impl {
    GatewayConfig config;
    httplib::Server server;
    std::thread serve_thread;

    explicit Impl(GatewayConfig cfg) : config(std::move(cfg)) { setup(); }

    static void reply_json(httplib::Response& res, int status, const json& body) {
        res.status = status;
        res.set_content(body.dump(), "application/json");
    }

    static void reply_error(httplib::Response& res, int status, const std::string& message) {
        reply_json(res, status, json{{"error", message}});
    }

    // True when the policy metric needs the entailment oracle at all.
    bool policy_needs_oracle() const {
        return config.policy.metric == "se" || config.policy.metric == "num_semantic_sets";
    }

    bool parse_body(const httplib::Request& req, httplib::Response& res, GenerationRecord& record) {
        try {
            record = parse_record(req.body);
            return true;
        } catch (const ParseError& e) {
            reply_error(res, e.invariant() ? 422 : 400, e.what());
            return false;
        }
    }

    bool compute_scores(httplib::Response& res, const GenerationRecord& record,
                        UncertaintyScores& scores) {
        try {
            scores = score_record(record, *config.oracle, config.hedge_lexicon, config.scoring);
            return true;
        } catch (const OracleError& e) {
            reply_error(res, 503, e.what());
            return false;
        } catch (const std::invalid_argument& e) {
            reply_error(res, 422, e.what());
            return false;
        }
    }

    void setup() {
        server.set_payload_max_length(config.max_body_bytes);

        server.Post("/v1/score", [this](const httplib::Request& req, httplib::Response& res) {
            GenerationRecord record;
            if (!parse_body(req, res, record)) return;
            UncertaintyScores scores;
            if (!compute_scores(res, record, scores)) return;
            reply_json(res, 200, scores.to_json());
        });

        server.Post("/v1/decide", [this](const httplib::Request& req, httplib::Response& res) {
            GenerationRecord record;
            if (!parse_body(req, res, record)) return;
            UncertaintyScores scores;
            if (!compute_scores(res, record, scores)) return;
            try {
                Decision decision = decide(scores, config.policy, record.id);
                reply_json(res, 200, decision.to_json());
            } catch (const std::invalid_argument& e) {
                reply_error(res, 422, e.what());
            }
        });

        server.Get("/healthz", [this](const httplib::Request&, httplib::Response& res) {
            if (policy_needs_oracle() && config.oracle_is_remote) {
                try {
                    config.oracle->judge("health check", "health check");
                } catch (const OracleError& e) {
                    reply_json(res, 503, json{{"status", "unavailable"}, {"error", e.what()}});
                    return;
                }
            }
            reply_json(res, 200, json{{"status", "ok"},
                                      {"policy_fingerprint", config.policy.fingerprint}});
        });
    }
};

Gateway::Gateway(GatewayConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

Gateway::~Gateway() { stop(); }

bool Gateway::listen() {
    return impl_->server.listen(impl_->config.listen_host, impl_->config.listen_port);
}

int Gateway::start_async() {
    int port = impl_->server.bind_to_any_port(impl_->config.listen_host);
    impl_->serve_thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port;
}

void Gateway::stop() {
    impl_->server.stop();
    if (impl_->serve_thread.joinable()) impl_->serve_thread.join();
}

}  // namespace abstain
