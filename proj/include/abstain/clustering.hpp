#pragma once

#include <string>
#include <vector>

#include "abstain/oracle.hpp"
#include "abstain/record.hpp"

namespace abstain {

// Partition of sample indices into semantic-equivalence clusters. Cluster
// ids are contiguous 0..C-1 in order of first appearance.
struct Clustering {
    std::vector<int> assignments;          // sample index -> cluster id
    std::vector<double> cluster_log_probs; // log p(c_j | x) per cluster
    int num_clusters = 0;
};

// Numerically stable log(sum(exp(x_i))).
double log_sum_exp(const std::vector<double>& values);

// Bidirectional entailment on prompt-conditioned texts: both directions of
// judge(prompt + " " + a, prompt + " " + b) must hold.
bool bidirectional_equivalent(const EntailmentOracle& oracle, const std::string& prompt,
                              const std::string& a, const std::string& b);

// Greedy sequential clustering: each sample is compared against the first
// member of every existing cluster in id order and joins the first
// bidirectional match, otherwise opens a new cluster.
Clustering cluster_samples(const EntailmentOracle& oracle, const std::string& prompt,
                           const std::vector<ResponseSample>& samples);

}  // namespace abstain
