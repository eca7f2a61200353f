#pragma once

#include <memory>
#include <string>

#include "abstain/lexicon.hpp"
#include "abstain/metrics.hpp"
#include "abstain/oracle.hpp"
#include "abstain/policy.hpp"

namespace abstain {

struct GatewayConfig {
    std::string listen_host = "127.0.0.1";
    int listen_port = 8080;
    AbstentionPolicy policy;
    std::shared_ptr<EntailmentOracle> oracle;
    HedgeLexicon hedge_lexicon;
    ScoringOptions scoring;
    size_t max_body_bytes = 4 * 1024 * 1024;
    bool oracle_is_remote = false;
};

// HTTP service exposing POST /v1/score, POST /v1/decide and GET /healthz.
// Stateless per request; scoring and decisions are byte-identical to the
// CLI on the same configuration.
class Gateway {
public:
    explicit Gateway(GatewayConfig config);
    ~Gateway();

    // Blocking serve on the configured address.
    bool listen();

    // Test support: bind an ephemeral port on listen_host, serve on a
    // background thread, return the port.
    int start_async();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace abstain
