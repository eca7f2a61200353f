#pragma once

#include <string>
#include <vector>

#include "abstain/evaluation.hpp"
#include "abstain/metrics.hpp"

namespace abstain {

enum class CalibrationMode { rejection_rate, false_abstention };

CalibrationMode parse_calibration_mode(const std::string& name);
std::string calibration_mode_name(CalibrationMode mode);

// Abstain iff score(metric) > threshold. Immutable once created.
struct AbstentionPolicy {
    std::string metric;
    double threshold = 0.0;
    CalibrationMode mode = CalibrationMode::rejection_rate;
    double target = 0.0;
    std::string fingerprint;  // hash of the calibration scores
    std::string timestamp;

    json to_json() const;
    static AbstentionPolicy from_json(const json& j);
};

struct Decision {
    bool abstain = false;
    std::string record_id;
    std::string metric;
    double value = 0.0;
    double threshold = 0.0;

    json to_json() const;
};

// FNV-1a over the serialized calibration scores; identifies the set a
// threshold was derived from.
std::string fingerprint_scores(const std::vector<double>& scores);

// threshold = smallest observed score such that the fraction of scores
// strictly above it is <= target.
AbstentionPolicy calibrate_rejection_rate(const std::vector<double>& scores, double target,
                                          const std::string& metric);

// Among observed-score thresholds (plus the abstain-all sentinel
// min(scores) - 1) with false-abstention rate <= max_far, pick the one
// maximizing the true-abstention rate; ties go to the larger threshold.
AbstentionPolicy calibrate_false_abstention(const std::vector<ScoredItem>& items, double max_far,
                                            const std::string& metric);

Decision decide(const UncertaintyScores& scores, const AbstentionPolicy& policy,
                const std::string& record_id = "");

struct SelectiveSummary {
    double coverage = 0.0;            // fraction answered
    double selective_accuracy = 0.0;  // acceptable among answered (1.0 when none answered)
    double abstention_rate_positive = 0.0;
    double abstention_rate_negative = 0.0;
    long answered = 0;
    long abstained = 0;

    json to_json() const;
};

SelectiveSummary selective_summary(const ScoredDataset& dataset, const AbstentionPolicy& policy,
                                   TaskKind task, const RefusalLexicon& refusal);

}  // namespace abstain
