#include "abstain/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "abstain/text.hpp"

namespace abstain {

json UncertaintyScores::to_json() const {
    json j;
    j["nll"] = nll;
    if (pe) j["pe"] = *pe;
    if (se) j["se"] = *se;
    if (num_semantic_sets) j["num_semantic_sets"] = *num_semantic_sets;
    j["indu"] = indu;
    return j;
}

UncertaintyScores UncertaintyScores::from_json(const json& j) {
    UncertaintyScores scores;
    if (!j.is_object() || !j.contains("nll") || !j.contains("indu"))
        throw ParseError("scores", "missing nll/indu");
    scores.nll = j["nll"].get<double>();
    scores.indu = j["indu"].get<long>();
    if (j.contains("pe")) scores.pe = j["pe"].get<double>();
    if (j.contains("se")) scores.se = j["se"].get<double>();
    if (j.contains("num_semantic_sets")) scores.num_semantic_sets = j["num_semantic_sets"].get<int>();
    return scores;
}

std::optional<double> UncertaintyScores::metric_value(const std::string& metric) const {
    if (metric == "nll") return nll;
    if (metric == "indu") return static_cast<double>(indu);
    if (metric == "pe") return pe;
    if (metric == "se") return se;
    if (metric == "num_semantic_sets") {
        if (num_semantic_sets) return static_cast<double>(*num_semantic_sets);
        return std::nullopt;
    }
    throw std::invalid_argument("unknown metric: " + metric);
}

const std::vector<std::string>& metric_names() {
    static const std::vector<std::string> names{"nll", "pe", "se", "num_semantic_sets", "indu"};
    return names;
}

double nll(const ResponseSample& sample, bool length_normalize) {
    if (sample.token_log_probs.empty())
        throw std::invalid_argument("nll: sample has no token log-probs");
    double sum = 0.0;
    for (double lp : sample.token_log_probs) sum -= lp;
    if (length_normalize) sum /= static_cast<double>(sample.token_log_probs.size());
    return sum;
}

double predictive_entropy(const std::vector<ResponseSample>& samples, bool length_normalize) {
    if (samples.empty())
        throw std::invalid_argument("predictive_entropy: no samples");
    double sum = 0.0;
    for (const ResponseSample& s : samples) sum += nll(s, length_normalize);
    return sum / static_cast<double>(samples.size());
}

double semantic_entropy(const std::vector<ResponseSample>& samples, const Clustering& clustering,
                        bool length_normalize) {
    if (samples.empty())
        throw std::invalid_argument("semantic_entropy: no samples");
    if (clustering.assignments.size() != samples.size())
        throw std::invalid_argument("semantic_entropy: clustering does not match samples");

    std::vector<double> cluster_log_probs;
    if (!length_normalize) {
        cluster_log_probs = clustering.cluster_log_probs;
    } else {
        cluster_log_probs.resize(clustering.num_clusters);
        for (int c = 0; c < clustering.num_clusters; ++c) {
            std::vector<double> members;
            for (size_t i = 0; i < samples.size(); ++i)
                if (clustering.assignments[i] == c)
                    members.push_back(-nll(samples[i], true));
            cluster_log_probs[c] = log_sum_exp(members);
        }
    }

    double sum = 0.0;
    for (double lp : cluster_log_probs) sum -= lp;
    return sum / static_cast<double>(cluster_log_probs.size());
}

long count_hedges(const std::string& response, const HedgeLexicon& lexicon) {
    long count = 0;
    size_t i = 0;
    while (i < response.size()) {
        if (!text::boundary_before(response, i) ||
            !text::is_word_byte(static_cast<unsigned char>(response[i]))) {
            ++i;
            continue;
        }
        size_t matched = 0;
        for (const std::string& phrase : lexicon.phrases) {  // longest first
            size_t len = text::match_at(response, i, phrase);
            if (len > 0 && text::boundary_after(response, i + len)) {
                matched = len;
                break;
            }
        }
        if (matched > 0) {
            ++count;
            i += matched;
        } else {
            // skip the rest of this word
            while (i < response.size() && text::is_word_byte(static_cast<unsigned char>(response[i])))
                ++i;
        }
    }
    return count;
}

UncertaintyScores score_record(const GenerationRecord& record, const EntailmentOracle& oracle,
                               const HedgeLexicon& lexicon, const ScoringOptions& options) {
    UncertaintyScores scores;
    scores.nll = nll(record.greedy, options.length_normalize);
    scores.indu = count_hedges(record.greedy.text, lexicon);

    if (options.compute_entropy) {
        if (record.samples.size() < 2)
            throw std::invalid_argument("record '" + record.id +
                                        "': entropy scoring requires at least 2 samples");
        Clustering clustering = cluster_samples(oracle, record.prompt, record.samples);
        scores.pe = predictive_entropy(record.samples, options.length_normalize);
        scores.se = semantic_entropy(record.samples, clustering, options.length_normalize);
        scores.num_semantic_sets = clustering.num_clusters;
    }
    return scores;
}

}  // namespace abstain
