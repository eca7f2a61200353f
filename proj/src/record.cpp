#include "abstain/record.hpp"

#include <cmath>
#include <fstream>
#include <unordered_map>

namespace abstain {

std::string ParseError::format(const std::string& field, const std::string& message, long line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    out += message;
    return out;
}

double ResponseSample::sequence_log_prob() const {
    double sum = 0.0;
    for (double lp : token_log_probs) sum += lp;
    return sum;
}

namespace {

constexpr double kClampCeiling = 1e-6;

// Validates and clamps token_log_probs in place inside the json node, so
// serialization reflects exactly what the in-memory sample holds.
ResponseSample parse_sample(json& node, const std::string& field, long line) {
    if (!node.is_object())
        throw ParseError(field, "expected a JSON object", line);
    if (!node.contains("text") || !node["text"].is_string())
        throw ParseError(field + ".text", "missing or not a string", line);

    ResponseSample sample;
    sample.text = node["text"].get<std::string>();

    if (node.contains("token_log_probs")) {
        json& probs = node["token_log_probs"];
        if (!probs.is_array())
            throw ParseError(field + ".token_log_probs", "expected an array", line);
        sample.token_log_probs.reserve(probs.size());
        for (size_t i = 0; i < probs.size(); ++i) {
            json& entry = probs[i];
            const std::string where = field + ".token_log_probs[" + std::to_string(i) + "]";
            if (!entry.is_number())
                throw ParseError(where, "expected a number", line);
            double value = entry.get<double>();
            if (!std::isfinite(value))
                throw ParseError(where, "non-finite log-prob", line, /*invariant=*/true);
            if (value > kClampCeiling)
                throw ParseError(where, "log-prob above zero", line, /*invariant=*/true);
            if (value > 0.0) {
                value = 0.0;
                entry = 0;  // integer zero, serializes as "0"
            }
            sample.token_log_probs.push_back(value);
        }
    }
    return sample;
}

}  // namespace

GenerationRecord parse_record(const std::string& line, long line_number) {
    json raw = json::parse(line, nullptr, false);
    if (raw.is_discarded())
        throw ParseError("", "malformed JSON", line_number);
    if (!raw.is_object())
        throw ParseError("", "expected a JSON object", line_number);

    GenerationRecord record;
    if (!raw.contains("id") || !raw["id"].is_string())
        throw ParseError("id", "missing or not a string", line_number);
    record.id = raw["id"].get<std::string>();
    if (!raw.contains("prompt") || !raw["prompt"].is_string())
        throw ParseError("prompt", "missing or not a string", line_number);
    record.prompt = raw["prompt"].get<std::string>();
    if (!raw.contains("greedy"))
        throw ParseError("greedy", "missing", line_number);
    record.greedy = parse_sample(raw["greedy"], "greedy", line_number);

    if (raw.contains("samples")) {
        json& samples = raw["samples"];
        if (!samples.is_array())
            throw ParseError("samples", "expected an array", line_number);
        record.samples.reserve(samples.size());
        for (size_t i = 0; i < samples.size(); ++i)
            record.samples.push_back(parse_sample(samples[i], "samples[" + std::to_string(i) + "]", line_number));
    }

    if (raw.contains("reference_answers")) {
        const json& refs = raw["reference_answers"];
        if (!refs.is_array())
            throw ParseError("reference_answers", "expected an array", line_number);
        std::vector<std::string> answers;
        for (const auto& ref : refs) {
            if (!ref.is_string())
                throw ParseError("reference_answers", "expected strings", line_number);
            answers.push_back(ref.get<std::string>());
        }
        record.reference_answers = std::move(answers);
    }

    if (raw.contains("labels")) {
        const json& labels = raw["labels"];
        if (!labels.is_object())
            throw ParseError("labels", "expected an object", line_number);
        if (labels.contains("answerable")) {
            if (!labels["answerable"].is_boolean())
                throw ParseError("labels.answerable", "expected a boolean", line_number);
            record.labels.answerable = labels["answerable"].get<bool>();
        }
        if (labels.contains("safe")) {
            if (!labels["safe"].is_boolean())
                throw ParseError("labels.safe", "expected a boolean", line_number);
            record.labels.safe = labels["safe"].get<bool>();
        }
    }

    record.raw = std::move(raw);
    return record;
}

std::string serialize_record(const GenerationRecord& record) {
    // raw already holds the clamped token_log_probs; nlohmann keeps object
    // keys sorted and emits shortest round-trip doubles, so output is
    // canonical and bit-stable.
    return record.raw.dump();
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("", "cannot open file: " + path);

    Dataset dataset;
    dataset.source_path = path;
    std::unordered_map<std::string, long> seen;
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        GenerationRecord record = parse_record(line, line_number);
        auto [it, inserted] = seen.emplace(record.id, line_number);
        if (!inserted)
            throw ParseError("id", "duplicate id '" + record.id + "' (first seen at line " +
                                       std::to_string(it->second) + ")", line_number);
        dataset.records.push_back(std::move(record));
    }
    return dataset;
}

}  // namespace abstain
