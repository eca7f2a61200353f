#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace abstain {

using json = nlohmann::json;

// Thrown by parsing/validation; carries the offending field and, when
// known, the 1-based line number in the source file.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string field, std::string message, long line = 0, bool invariant = false)
        : std::runtime_error(format(field, message, line)),
          field_(std::move(field)), line_(line), invariant_(invariant) {}

    const std::string& field() const { return field_; }
    long line() const { return line_; }
    // True when the input was well-formed JSON but violated a value
    // invariant (e.g. a positive log-prob) rather than a shape rule.
    bool invariant() const { return invariant_; }

private:
    static std::string format(const std::string& field, const std::string& message, long line);
    std::string field_;
    long line_;
    bool invariant_ = false;
};

// One generated response plus its per-token conditional log-probabilities
// (natural log). Values in (0, 1e-6] are clamped to 0 at ingestion; larger
// positives are rejected as corrupt.
struct ResponseSample {
    std::string text;
    std::vector<double> token_log_probs;

    // Sum of token log-probs, i.e. log p(s | x) for the whole sequence.
    double sequence_log_prob() const;
};

struct RecordLabels {
    std::optional<bool> answerable;
    std::optional<bool> safe;
};

struct GenerationRecord {
    std::string id;
    std::string prompt;
    ResponseSample greedy;
    std::vector<ResponseSample> samples;
    std::optional<std::vector<std::string>> reference_answers;
    RecordLabels labels;

    // Original parsed JSON object; unknown fields ride along for round-trip.
    json raw;
};

struct Dataset {
    std::vector<GenerationRecord> records;
    std::string source_path;

    size_t size() const { return records.size(); }
};

// line_number is used only for error context (0 = unknown).
GenerationRecord parse_record(const std::string& line, long line_number = 0);

// One JSON line, no trailing newline. parse(serialize(r)) == r field-for-field;
// unknown fields are preserved.
std::string serialize_record(const GenerationRecord& record);

Dataset load_dataset(const std::string& path);

}  // namespace abstain
