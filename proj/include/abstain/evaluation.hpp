#pragma once

#include <map>
#include <string>
#include <vector>

#include "abstain/labeling.hpp"
#include "abstain/metrics.hpp"

namespace abstain {

struct RocPoint {
    double fpr = 0.0;  // false abstention rate
    double tpr = 0.0;
    double threshold = 0.0;
};

struct ArcPoint {
    double rejection_rate = 0.0;
    double accuracy = 0.0;
    double threshold = 0.0;
};

struct ScoredItem {
    double score = 0.0;
    bool positive = false;  // should abstain
};

struct ArcItem {
    double score = 0.0;
    bool acceptable = false;  // correct / safe
    std::string id;
};

struct GroupStats {
    double mean_positive = 0.0;
    double mean_negative = 0.0;
    long count_positive = 0;
    long count_negative = 0;
};

struct MetricEval {
    double auroc = 0.0;
    std::vector<RocPoint> roc;
    std::vector<ArcPoint> arc;  // empty for the hallucination task
    double auarc = 0.0;         // meaningful only when arc is non-empty
    GroupStats groups;
};

struct EvalReport {
    TaskKind task = TaskKind::correctness;
    std::string dataset;
    long num_records = 0;
    long num_positive = 0;
    long num_negative = 0;
    std::map<std::string, MetricEval> metrics;  // keyed by metric name
    std::map<long, long> indu_histogram_positive;
    std::map<long, long> indu_histogram_negative;

    json to_json() const;
};

// Probability that a random positive outscores a random negative, ties 1/2.
// Higher score must indicate the positive (should-abstain) class.
double auroc(const std::vector<ScoredItem>& items);

// One point per distinct score threshold (descending) plus the (1,1)
// endpoint; classification rule is "positive iff score > threshold".
std::vector<RocPoint> roc_points(const std::vector<ScoredItem>& items);

// Sort by score descending (ties by id ascending), reject top-k for
// k = 0..n-1, report accuracy on the retained items.
std::vector<ArcPoint> accuracy_rejection_curve(const std::vector<ArcItem>& items);

// Trapezoidal mean accuracy over the rejection-rate grid.
double auarc(const std::vector<ArcPoint>& points);

struct GroupMeansResult {
    std::map<std::string, GroupStats> per_metric;
    std::map<long, long> indu_histogram_positive;
    std::map<long, long> indu_histogram_negative;
};

GroupMeansResult group_means(const std::vector<std::pair<UncertaintyScores, bool>>& scored);

struct EvalConfig {
    RefusalLexicon refusal;
};

EvalReport evaluate_dataset(const ScoredDataset& dataset, TaskKind task, const EvalConfig& config);

std::string roc_csv(const std::vector<RocPoint>& points);
std::string arc_csv(const std::vector<ArcPoint>& points);

}  // namespace abstain
