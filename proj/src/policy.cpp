#include "abstain/policy.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace abstain {

CalibrationMode parse_calibration_mode(const std::string& name) {
    if (name == "rejection-rate" || name == "rejection_rate") return CalibrationMode::rejection_rate;
    if (name == "false-abstention" || name == "false_abstention") return CalibrationMode::false_abstention;
    throw std::invalid_argument("unknown calibration mode: " + name);
}

std::string calibration_mode_name(CalibrationMode mode) {
    return mode == CalibrationMode::rejection_rate ? "rejection_rate" : "false_abstention";
}

json AbstentionPolicy::to_json() const {
    json j;
    j["metric"] = metric;
    j["threshold"] = threshold;
    j["calibration"] = {{"mode", calibration_mode_name(mode)},
                        {"target", target},
                        {"fingerprint", fingerprint},
                        {"timestamp", timestamp}};
    return j;
}

AbstentionPolicy AbstentionPolicy::from_json(const json& j) {
    if (!j.is_object() || !j.contains("metric") || !j.contains("threshold"))
        throw ParseError("policy", "missing metric/threshold");
    AbstentionPolicy policy;
    policy.metric = j["metric"].get<std::string>();
    policy.threshold = j["threshold"].get<double>();
    if (j.contains("calibration")) {
        const json& c = j["calibration"];
        if (c.contains("mode")) policy.mode = parse_calibration_mode(c["mode"].get<std::string>());
        if (c.contains("target")) policy.target = c["target"].get<double>();
        if (c.contains("fingerprint")) policy.fingerprint = c["fingerprint"].get<std::string>();
        if (c.contains("timestamp")) policy.timestamp = c["timestamp"].get<std::string>();
    }
    return policy;
}

json Decision::to_json() const {
    json j;
    j["id"] = record_id;
    j["verdict"] = abstain ? "abstain" : "answer";
    j["metric"] = metric;
    j["value"] = value;
    j["threshold"] = threshold;
    return j;
}

std::string fingerprint_scores(const std::vector<double>& scores) {
    uint64_t hash = 0xcbf29ce484222325ull;
    auto mix = [&hash](const void* data, size_t len) {
        const unsigned char* bytes = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            hash ^= bytes[i];
            hash *= 0x100000001b3ull;
        }
    };
    for (double s : scores) mix(&s, sizeof(s));
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

AbstentionPolicy calibrate_rejection_rate(const std::vector<double>& scores, double target,
                                          const std::string& metric) {
    if (scores.empty())
        throw std::invalid_argument("calibrate: empty score list");
    if (target < 0.0 || target >= 1.0)
        throw std::invalid_argument("calibrate: rejection-rate target must be in [0, 1)");

    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    double threshold = sorted.back();
    for (double candidate : sorted) {
        long above = static_cast<long>(sorted.end() -
                                       std::upper_bound(sorted.begin(), sorted.end(), candidate));
        if (static_cast<double>(above) / n <= target) {
            threshold = candidate;
            break;
        }
    }

    AbstentionPolicy policy;
    policy.metric = metric;
    policy.threshold = threshold;
    policy.mode = CalibrationMode::rejection_rate;
    policy.target = target;
    policy.fingerprint = fingerprint_scores(scores);
    return policy;
}

AbstentionPolicy calibrate_false_abstention(const std::vector<ScoredItem>& items, double max_far,
                                            const std::string& metric) {
    long num_pos = 0, num_neg = 0;
    for (const ScoredItem& item : items) (item.positive ? num_pos : num_neg)++;
    if (num_neg == 0)
        throw std::invalid_argument("calibrate: false-abstention mode needs at least one negative");

    std::vector<double> candidates;
    double min_score = items.front().score;
    for (const ScoredItem& item : items) {
        candidates.push_back(item.score);
        min_score = std::min(min_score, item.score);
    }
    candidates.push_back(min_score - 1.0);  // abstain-all sentinel
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    bool found = false;
    double best_threshold = 0.0, best_tar = -1.0;
    for (double t : candidates) {  // descending, so first max wins the tie toward larger threshold
        long false_abstain = 0, true_abstain = 0;
        for (const ScoredItem& item : items)
            if (item.score > t) (item.positive ? true_abstain : false_abstain)++;
        double far = static_cast<double>(false_abstain) / static_cast<double>(num_neg);
        if (far > max_far) continue;
        double tar = num_pos == 0 ? 0.0
                                  : static_cast<double>(true_abstain) / static_cast<double>(num_pos);
        if (tar > best_tar) {
            best_tar = tar;
            best_threshold = t;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("calibrate: no threshold satisfies the false-abstention bound");

    std::vector<double> scores;
    for (const ScoredItem& item : items) scores.push_back(item.score);

    AbstentionPolicy policy;
    policy.metric = metric;
    policy.threshold = best_threshold;
    policy.mode = CalibrationMode::false_abstention;
    policy.target = max_far;
    policy.fingerprint = fingerprint_scores(scores);
    return policy;
}

Decision decide(const UncertaintyScores& scores, const AbstentionPolicy& policy,
                const std::string& record_id) {
    std::optional<double> value = scores.metric_value(policy.metric);
    if (!value)
        throw std::invalid_argument("record '" + record_id + "': metric '" + policy.metric +
                                    "' not present in scores");
    Decision decision;
    decision.abstain = *value > policy.threshold;
    decision.record_id = record_id;
    decision.metric = policy.metric;
    decision.value = *value;
    decision.threshold = policy.threshold;
    return decision;
}

json SelectiveSummary::to_json() const {
    json j;
    j["coverage"] = coverage;
    j["selective_accuracy"] = selective_accuracy;
    j["abstention_rate_positive"] = abstention_rate_positive;
    j["abstention_rate_negative"] = abstention_rate_negative;
    j["answered"] = answered;
    j["abstained"] = abstained;
    return j;
}

SelectiveSummary selective_summary(const ScoredDataset& dataset, const AbstentionPolicy& policy,
                                   TaskKind task, const RefusalLexicon& refusal) {
    if (dataset.records.empty())
        throw std::invalid_argument("selective_summary: empty dataset");
    long answered = 0, answered_acceptable = 0;
    long pos_total = 0, pos_abstained = 0, neg_total = 0, neg_abstained = 0;
    for (const ScoredRecord& sr : dataset.records) {
        bool positive = derive_positive(sr.record, task, refusal);
        Decision d = decide(sr.scores, policy, sr.record.id);
        (positive ? pos_total : neg_total)++;
        if (d.abstain) {
            (positive ? pos_abstained : neg_abstained)++;
        } else {
            ++answered;
            if (!positive) ++answered_acceptable;
        }
    }
    const double n = static_cast<double>(dataset.records.size());
    SelectiveSummary summary;
    summary.answered = answered;
    summary.abstained = static_cast<long>(dataset.records.size()) - answered;
    summary.coverage = static_cast<double>(answered) / n;
    summary.selective_accuracy =
        answered == 0 ? 1.0
                      : static_cast<double>(answered_acceptable) / static_cast<double>(answered);
    summary.abstention_rate_positive =
        pos_total == 0 ? 0.0 : static_cast<double>(pos_abstained) / static_cast<double>(pos_total);
    summary.abstention_rate_negative =
        neg_total == 0 ? 0.0 : static_cast<double>(neg_abstained) / static_cast<double>(neg_total);
    return summary;
}

}  // namespace abstain
