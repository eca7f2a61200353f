#include "abstain/batch.hpp"

#include <fstream>
#include <unordered_map>

#ifdef ABSTAIN_HAVE_OPENMP
#include <omp.h>
#endif

namespace abstain {

ScoredDataset score_dataset_serial(const Dataset& dataset, const EntailmentOracle& oracle,
                                   const HedgeLexicon& lexicon, const ScoringOptions& options) {
    ScoredDataset scored;
    scored.source_path = dataset.source_path;
    scored.records.reserve(dataset.size());
    for (const GenerationRecord& record : dataset.records)
        scored.records.push_back({record, score_record(record, oracle, lexicon, options)});
    return scored;
}

ScoredDataset score_dataset_parallel(const Dataset& dataset, const EntailmentOracle& oracle,
                                     const HedgeLexicon& lexicon, const ScoringOptions& options,
                                     int threads) {
#ifndef ABSTAIN_HAVE_OPENMP
    (void)threads;
    return score_dataset_serial(dataset, oracle, lexicon, options);
#else
    if (threads <= 1) return score_dataset_serial(dataset, oracle, lexicon, options);

    ScoredDataset scored;
    scored.source_path = dataset.source_path;
    scored.records.resize(dataset.size());
    std::exception_ptr failure;

    const long n = static_cast<long>(dataset.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        try {
            const GenerationRecord& record = dataset.records[i];
            scored.records[i] = {record, score_record(record, oracle, lexicon, options)};
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return scored;
#endif
}

std::string serialize_scored_record(const ScoredRecord& scored) {
    json j = scored.record.raw;
    j["scores"] = scored.scores.to_json();
    return j.dump();
}

ScoredRecord parse_scored_record(const std::string& line, long line_number) {
    ScoredRecord scored;
    scored.record = parse_record(line, line_number);
    if (!scored.record.raw.contains("scores"))
        throw ParseError("scores", "record '" + scored.record.id + "' has no scores object",
                         line_number);
    scored.scores = UncertaintyScores::from_json(scored.record.raw["scores"]);
    return scored;
}

ScoredDataset load_scored_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("", "cannot open file: " + path);
    ScoredDataset dataset;
    dataset.source_path = path;
    std::unordered_map<std::string, long> seen;
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        ScoredRecord record = parse_scored_record(line, line_number);
        auto [it, inserted] = seen.emplace(record.record.id, line_number);
        if (!inserted)
            throw ParseError("id", "duplicate id '" + record.record.id + "' (first seen at line " +
                                       std::to_string(it->second) + ")", line_number);
        dataset.records.push_back(std::move(record));
    }
    return dataset;
}

}  // namespace abstain
