#include "abstain/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abstain {

double log_sum_exp(const std::vector<double>& values) {
    if (values.empty()) return -std::numeric_limits<double>::infinity();
    double max_value = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(max_value)) return max_value;
    double sum = 0.0;
    for (double v : values) sum += std::exp(v - max_value);
    return max_value + std::log(sum);
}

bool bidirectional_equivalent(const EntailmentOracle& oracle, const std::string& prompt,
                              const std::string& a, const std::string& b) {
    const std::string qa = prompt.empty() ? a : prompt + " " + a;
    const std::string qb = prompt.empty() ? b : prompt + " " + b;
    return oracle.judge(qa, qb) && oracle.judge(qb, qa);
}

Clustering cluster_samples(const EntailmentOracle& oracle, const std::string& prompt,
                           const std::vector<ResponseSample>& samples) {
    if (samples.empty())
        throw std::invalid_argument("cluster_samples: empty sample list");

    Clustering clustering;
    clustering.assignments.resize(samples.size(), -1);
    std::vector<size_t> representatives;  // first member per cluster

    for (size_t i = 0; i < samples.size(); ++i) {
        int assigned = -1;
        for (size_t c = 0; c < representatives.size(); ++c) {
            if (bidirectional_equivalent(oracle, prompt, samples[i].text,
                                         samples[representatives[c]].text)) {
                assigned = static_cast<int>(c);
                break;
            }
        }
        if (assigned < 0) {
            assigned = static_cast<int>(representatives.size());
            representatives.push_back(i);
        }
        clustering.assignments[i] = assigned;
    }

    clustering.num_clusters = static_cast<int>(representatives.size());
    clustering.cluster_log_probs.resize(representatives.size());
    for (size_t c = 0; c < representatives.size(); ++c) {
        std::vector<double> members;
        for (size_t i = 0; i < samples.size(); ++i)
            if (clustering.assignments[i] == static_cast<int>(c))
                members.push_back(samples[i].sequence_log_prob());
        clustering.cluster_log_probs[c] = log_sum_exp(members);
    }
    return clustering;
}

}  // namespace abstain
