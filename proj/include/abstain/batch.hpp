#pragma once

#include <string>

#include "abstain/metrics.hpp"

namespace abstain {

// Serial reference implementation of dataset scoring.
ScoredDataset score_dataset_serial(const Dataset& dataset, const EntailmentOracle& oracle,
                                   const HedgeLexicon& lexicon, const ScoringOptions& options);

// OpenMP-parallel scoring across records. Clustering inside one record
// stays sequential, so results are identical to the serial path; output
// keeps ingestion order. threads <= 1 falls back to the serial path.
ScoredDataset score_dataset_parallel(const Dataset& dataset, const EntailmentOracle& oracle,
                                     const HedgeLexicon& lexicon, const ScoringOptions& options,
                                     int threads);

// One JSON line per record: the record's own fields plus a "scores" object.
std::string serialize_scored_record(const ScoredRecord& scored);
ScoredRecord parse_scored_record(const std::string& line, long line_number = 0);
ScoredDataset load_scored_dataset(const std::string& path);

}  // namespace abstain
