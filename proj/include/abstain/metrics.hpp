#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abstain/clustering.hpp"
#include "abstain/lexicon.hpp"
#include "abstain/oracle.hpp"
#include "abstain/record.hpp"

namespace abstain {

// The five uncertainty scores for one record. Entropy-family fields are
// absent when entropy scoring is disabled.
struct UncertaintyScores {
    double nll = 0.0;
    std::optional<double> pe;
    std::optional<double> se;
    std::optional<int> num_semantic_sets;
    long indu = 0;

    json to_json() const;
    static UncertaintyScores from_json(const json& j);

    // Value of a named metric: nll | pe | se | num_semantic_sets | indu.
    std::optional<double> metric_value(const std::string& metric) const;
};

struct ScoringOptions {
    bool compute_entropy = true;
    // Divide sequence log-likelihoods by token count. Off by default; the
    // raw sums match the entropy estimators literally.
    bool length_normalize = false;
};

double nll(const ResponseSample& sample, bool length_normalize = false);

double predictive_entropy(const std::vector<ResponseSample>& samples, bool length_normalize = false);

double semantic_entropy(const std::vector<ResponseSample>& samples, const Clustering& clustering,
                        bool length_normalize = false);

long count_hedges(const std::string& response, const HedgeLexicon& lexicon);

UncertaintyScores score_record(const GenerationRecord& record, const EntailmentOracle& oracle,
                               const HedgeLexicon& lexicon, const ScoringOptions& options = {});

// Names accepted by metric_value and CLI --metric.
const std::vector<std::string>& metric_names();

struct ScoredRecord {
    GenerationRecord record;
    UncertaintyScores scores;
};

struct ScoredDataset {
    std::vector<ScoredRecord> records;
    std::string source_path;

    size_t size() const { return records.size(); }
};

}  // namespace abstain
