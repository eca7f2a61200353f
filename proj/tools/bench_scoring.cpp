// Compares serial and OpenMP-parallel dataset scoring on a synthetic
// workload. Verifies both paths produce identical bytes before timing.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "abstain/batch.hpp"
#include "abstain/lexicon.hpp"
#include "abstain/synth.hpp"

using namespace abstain;

namespace {

Dataset make_workload(long n_records, int n_samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Dataset dataset;
    dataset.source_path = "bench";
    const char* texts[] = {"paris", "Paris", "rome", "the capital is paris", "berlin"};
    for (long i = 0; i < n_records; ++i) {
        json raw;
        raw["id"] = "r" + std::to_string(i);
        raw["prompt"] = "what is the capital of france";
        raw["greedy"] = {{"text", "I think it is perhaps Paris"},
                         {"token_log_probs", json::array({-0.5, -1.0, -0.25})}};
        json samples = json::array();
        for (int s = 0; s < n_samples; ++s) {
            samples.push_back({{"text", texts[rng() % 5]},
                               {"token_log_probs", json::array({-0.1 * static_cast<double>(1 + rng() % 20)})}});
        }
        raw["samples"] = std::move(samples);
        dataset.records.push_back(parse_record(raw.dump()));
    }
    return dataset;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string dump(const ScoredDataset& scored) {
    std::string out;
    for (const ScoredRecord& r : scored.records) out += serialize_scored_record(r) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    long n_records = argc > 1 ? std::stol(argv[1]) : 10000;
    int n_samples = argc > 2 ? std::stoi(argv[2]) : 10;
    int threads = argc > 3 ? std::stoi(argv[3]) : 4;

    Dataset dataset = make_workload(n_records, n_samples, 42);
    JaccardOracle oracle;
    HedgeLexicon hedges = make_lexicon({"perhaps", "maybe", "i think", "possibly"}, true);
    ScoringOptions options;

    auto t0 = std::chrono::steady_clock::now();
    ScoredDataset serial = score_dataset_serial(dataset, oracle, hedges, options);
    double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    ScoredDataset parallel = score_dataset_parallel(dataset, oracle, hedges, options, threads);
    double parallel_s = seconds_since(t0);

    if (dump(serial) != dump(parallel)) {
        std::fprintf(stderr, "FAIL: serial and parallel outputs differ\n");
        return 1;
    }

    std::printf("records=%ld samples=%d threads=%d\n", n_records, n_samples, threads);
    std::printf("serial:   %.3f s  (%.0f rec/s)\n", serial_s, n_records / serial_s);
    std::printf("parallel: %.3f s  (%.0f rec/s, %.2fx)\n", parallel_s, n_records / parallel_s,
                serial_s / parallel_s);
    return 0;
}
