#include "abstain/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace abstain {

namespace {

// Hand-rolled transforms on top of mt19937_64 so output bytes do not
// depend on the standard library's distribution implementations.
double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;  // in (0, 1]
}

double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

long poisson(std::mt19937_64& rng, double rate) {
    if (rate <= 0.0) return 0;
    double limit = std::exp(-rate);
    long k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= uniform01(rng);
    } while (p > limit);
    return k - 1;
}

// Single words only; none is a sub-phrase of another, so the injected
// count equals the hedge-counter's result exactly.
const char* kHedgePool[] = {"perhaps", "maybe", "possibly", "probably", "apparently", "presumably"};
constexpr size_t kHedgePoolSize = sizeof(kHedgePool) / sizeof(kHedgePool[0]);

GenerationRecord make_record(std::mt19937_64& rng, const SynthSpec& spec, bool positive, long index) {
    double mean = spec.mu0 + (positive ? spec.separation : 0.0);
    double nll_value;
    do {
        nll_value = mean + gaussian(rng);
    } while (nll_value < 0.0);

    long hedges = poisson(rng, positive ? spec.hedge_rate_pos : spec.hedge_rate_neg);
    std::string text = "the answer is alpha";
    for (long h = 0; h < hedges; ++h) {
        text += " ";
        text += kHedgePool[rng() % kHedgePoolSize];
    }

    json raw;
    raw["id"] = std::string(positive ? "pos-" : "neg-") + std::to_string(index);
    raw["prompt"] = "synthetic question " + std::to_string(index);
    raw["greedy"] = {{"text", text}, {"token_log_probs", json::array({-nll_value})}};
    raw["samples"] = json::array();
    raw["labels"] = {{"answerable", !positive}};

    GenerationRecord record = parse_record(raw.dump());
    return record;
}

}  // namespace

SynthSpec SynthSpec::from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("synth spec: expected a JSON object");
    SynthSpec spec;
    if (j.contains("n_pos")) spec.n_pos = j["n_pos"].get<long>();
    if (j.contains("n_neg")) spec.n_neg = j["n_neg"].get<long>();
    if (j.contains("separation")) spec.separation = j["separation"].get<double>();
    if (j.contains("hedge_rate_pos")) spec.hedge_rate_pos = j["hedge_rate_pos"].get<double>();
    if (j.contains("hedge_rate_neg")) spec.hedge_rate_neg = j["hedge_rate_neg"].get<double>();
    if (j.contains("mu0")) spec.mu0 = j["mu0"].get<double>();
    if (j.contains("seed")) spec.seed = j["seed"].get<uint64_t>();
    return spec;
}

Dataset generate_synthetic(const SynthSpec& spec) {
    if (spec.n_pos < 1 || spec.n_neg < 1)
        throw std::invalid_argument("synth spec: group sizes must be >= 1");
    if (spec.separation < 0.0)
        throw std::invalid_argument("synth spec: separation must be >= 0");
    if (spec.hedge_rate_pos < 0.0 || spec.hedge_rate_neg < 0.0)
        throw std::invalid_argument("synth spec: hedge rates must be >= 0");

    std::mt19937_64 rng(spec.seed);
    Dataset dataset;
    dataset.source_path = "synthetic";
    dataset.records.reserve(spec.n_neg + spec.n_pos);
    for (long i = 0; i < spec.n_neg; ++i)
        dataset.records.push_back(make_record(rng, spec, false, i));
    for (long i = 0; i < spec.n_pos; ++i)
        dataset.records.push_back(make_record(rng, spec, true, i));
    return dataset;
}

}  // namespace abstain
