#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace abstain {

// Raised when a backend cannot produce a judgement (transport failure,
// timeout, malformed response). Carries the backend name for diagnostics.
class OracleError : public std::runtime_error {
public:
    OracleError(std::string backend, const std::string& message)
        : std::runtime_error("oracle backend '" + backend + "': " + message),
          backend_(std::move(backend)) {}
    const std::string& backend() const { return backend_; }

private:
    std::string backend_;
};

// Directional entailment judge. Implementations must be deterministic for
// fixed configuration and inputs, and safe to call concurrently.
class EntailmentOracle {
public:
    virtual ~EntailmentOracle() = default;
    virtual std::string name() const = 0;
    virtual bool judge(const std::string& premise, const std::string& hypothesis) const = 0;
};

// Equality after lowercasing and whitespace normalization.
class ExactOracle final : public EntailmentOracle {
public:
    std::string name() const override { return "exact"; }
    bool judge(const std::string& premise, const std::string& hypothesis) const override;
};

// Token-set Jaccard similarity at or above a threshold (default 0.5).
class JaccardOracle final : public EntailmentOracle {
public:
    explicit JaccardOracle(double threshold = 0.5) : threshold_(threshold) {}
    std::string name() const override { return "jaccard"; }
    bool judge(const std::string& premise, const std::string& hypothesis) const override;

private:
    double threshold_;
};

// Test backends.
class AlwaysTrueOracle final : public EntailmentOracle {
public:
    std::string name() const override { return "always-true"; }
    bool judge(const std::string&, const std::string&) const override { return true; }
};

class AlwaysFalseOracle final : public EntailmentOracle {
public:
    std::string name() const override { return "always-false"; }
    bool judge(const std::string&, const std::string&) const override { return false; }
};

struct RemoteOracleConfig {
    std::string url;                         // e.g. http://host:port/path
    double timeout_seconds = 10.0;
    int max_in_flight = 8;
    int retries = 2;                         // retries after the first attempt
    std::optional<double> entailment_threshold;  // unset: entailment must be argmax
};

// Client for a remote NLI service. POST {"premise","hypothesis"} ->
// {"entailment","neutral","contradiction"}.
class RemoteNliOracle final : public EntailmentOracle {
public:
    explicit RemoteNliOracle(RemoteOracleConfig config);
    ~RemoteNliOracle() override;
    std::string name() const override { return "remote"; }
    bool judge(const std::string& premise, const std::string& hypothesis) const override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Factory over the builtin backend names used by CLI flags.
std::shared_ptr<EntailmentOracle> make_oracle(const std::string& backend,
                                              double jaccard_threshold,
                                              const std::string& nli_url);

}  // namespace abstain
