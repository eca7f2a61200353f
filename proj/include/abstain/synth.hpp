#pragma once

#include <cstdint>
#include <string>

#include "abstain/record.hpp"

namespace abstain {

// Synthetic dataset with known separation between the positive
// (unanswerable) and negative (answerable) groups. Greedy NLL is drawn
// from Normal(mu0, 1) for negatives and Normal(mu0 + separation, 1) for
// positives, truncated at 0; hedge words are injected at per-group Poisson
// rates. Expected AUROC for the NLL ranker is Phi(separation / sqrt(2)).
struct SynthSpec {
    long n_pos = 1;
    long n_neg = 1;
    double separation = 0.0;
    double hedge_rate_pos = 0.0;
    double hedge_rate_neg = 0.0;
    double mu0 = 10.0;
    uint64_t seed = 0;

    static SynthSpec from_json(const json& j);
};

Dataset generate_synthetic(const SynthSpec& spec);

}  // namespace abstain
