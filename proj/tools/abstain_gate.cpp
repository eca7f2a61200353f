// abstain-gate: score LLM generation records with uncertainty metrics,
// evaluate metric quality, calibrate abstention thresholds, apply them
// offline, or serve them over HTTP.
//
// Exit codes: 0 success, 1 data/config error, 2 external-backend error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "abstain/batch.hpp"
#include "abstain/evaluation.hpp"
#include "abstain/gateway.hpp"
#include "abstain/policy.hpp"
#include "abstain/synth.hpp"

using namespace abstain;

namespace {

struct CommonFlags {
    std::string input = "-";
    std::string out;
    std::string oracle_backend = "exact";
    double jaccard_threshold = 0.5;
    std::string nli_url;
    std::string hedge_lexicon_path;
    std::string refusal_lexicon_path;
    bool no_entropy = false;
    int parallel = 1;
};

std::string env_or(const char* name, const std::string& fallback) {
    const char* value = std::getenv(name);
    return value ? value : fallback;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("", "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ParseError("", "cannot write file: " + out_path);
    out << content;
}

Dataset parse_dataset_text(const std::string& text, const std::string& name) {
    Dataset dataset;
    dataset.source_path = name;
    std::istringstream in(text);
    std::string line;
    long line_number = 0;
    std::unordered_map<std::string, long> seen;
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

ScoredDataset parse_scored_text(const std::string& text, const std::string& name) {
    ScoredDataset dataset;
    dataset.source_path = name;
    std::istringstream in(text);
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        dataset.records.push_back(parse_scored_record(line, line_number));
    }
    return dataset;
}

HedgeLexicon hedge_lexicon_for(const CommonFlags& flags) {
    if (flags.hedge_lexicon_path.empty()) return default_hedge_lexicon();
    return load_lexicon(flags.hedge_lexicon_path, /*longest_first=*/true);
}

RefusalLexicon refusal_lexicon_for(const CommonFlags& flags) {
    if (flags.refusal_lexicon_path.empty()) return default_refusal_lexicon();
    return load_lexicon(flags.refusal_lexicon_path, /*longest_first=*/false);
}

std::shared_ptr<EntailmentOracle> oracle_for(const CommonFlags& flags) {
    std::string url = flags.nli_url.empty() ? env_or("ABSTAIN_GATE_NLI_URL", "") : flags.nli_url;
    return make_oracle(flags.oracle_backend, flags.jaccard_threshold, url);
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_oracle) {
    cmd->add_option("--in,input", flags.input, "input JSONL ('-' for stdin)");
    cmd->add_option("--out", flags.out, "output path (default stdout)");
    cmd->add_option("--hedge-lexicon", flags.hedge_lexicon_path, "hedge lexicon file");
    cmd->add_option("--refusal-lexicon", flags.refusal_lexicon_path, "refusal lexicon file");
    if (with_oracle) {
        cmd->add_option("--oracle", flags.oracle_backend, "entailment backend: exact|jaccard|remote")
            ->check(CLI::IsMember({"exact", "jaccard", "remote"}));
        cmd->add_option("--jaccard-threshold", flags.jaccard_threshold, "jaccard cutoff");
        cmd->add_option("--nli-url", flags.nli_url, "remote NLI endpoint");
        cmd->add_flag("--no-entropy", flags.no_entropy, "skip PE/SE/semantic-set scoring");
        cmd->add_option("--parallel", flags.parallel, "worker threads for scoring");
    }
}

int cmd_score(const CommonFlags& flags) {
    Dataset dataset = parse_dataset_text(read_input(flags.input), flags.input);
    HedgeLexicon hedges = hedge_lexicon_for(flags);
    ScoringOptions options;
    options.compute_entropy = !flags.no_entropy;

    std::shared_ptr<EntailmentOracle> oracle;
    if (options.compute_entropy)
        oracle = oracle_for(flags);
    else
        oracle = std::make_shared<AlwaysFalseOracle>();  // unused

    ScoredDataset scored =
        score_dataset_parallel(dataset, *oracle, hedges, options, flags.parallel);
    std::string out;
    for (const ScoredRecord& r : scored.records) out += serialize_scored_record(r) + "\n";
    write_output(flags.out, out);
    return 0;
}

int cmd_eval(const CommonFlags& flags, const std::string& task_name, const std::string& csv_dir) {
    ScoredDataset dataset = parse_scored_text(read_input(flags.input), flags.input);
    TaskKind task = parse_task(task_name);
    EvalConfig config{refusal_lexicon_for(flags)};
    EvalReport report = evaluate_dataset(dataset, task, config);

    if (!csv_dir.empty()) {
        std::filesystem::create_directories(csv_dir);
        for (const auto& [metric, eval] : report.metrics) {
            std::ofstream roc(std::filesystem::path(csv_dir) / (metric + "_roc.csv"),
                              std::ios::binary);
            roc << roc_csv(eval.roc);
            if (!eval.arc.empty()) {
                std::ofstream arc(std::filesystem::path(csv_dir) / (metric + "_arc.csv"),
                                  std::ios::binary);
                arc << arc_csv(eval.arc);
            }
        }
    }
    write_output(flags.out, report.to_json().dump(2) + "\n");
    return 0;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buffer;
}

int cmd_calibrate(const CommonFlags& flags, const std::string& metric, const std::string& mode_name,
                  double target, const std::string& task_name, const std::string& timestamp) {
    ScoredDataset dataset = parse_scored_text(read_input(flags.input), flags.input);
    if (dataset.records.empty())
        throw ParseError("", "calibration set is empty");
    CalibrationMode mode = parse_calibration_mode(mode_name);

    AbstentionPolicy policy;
    if (mode == CalibrationMode::rejection_rate) {
        std::vector<double> scores;
        for (const ScoredRecord& sr : dataset.records) {
            std::optional<double> value = sr.scores.metric_value(metric);
            if (!value)
                throw ParseError("scores", "record '" + sr.record.id + "' lacks metric '" + metric + "'");
            scores.push_back(*value);
        }
        policy = calibrate_rejection_rate(scores, target, metric);
    } else {
        TaskKind task = parse_task(task_name);
        RefusalLexicon refusal = refusal_lexicon_for(flags);
        std::vector<ScoredItem> items;
        for (const ScoredRecord& sr : dataset.records) {
            std::optional<double> value = sr.scores.metric_value(metric);
            if (!value)
                throw ParseError("scores", "record '" + sr.record.id + "' lacks metric '" + metric + "'");
            items.push_back({*value, derive_positive(sr.record, task, refusal)});
        }
        policy = calibrate_false_abstention(items, target, metric);
    }
    policy.timestamp = timestamp == "now" ? utc_timestamp() : timestamp;
    write_output(flags.out, policy.to_json().dump(2) + "\n");
    return 0;
}

int cmd_decide(const CommonFlags& flags, const std::string& policy_path) {
    ScoredDataset dataset = parse_scored_text(read_input(flags.input), flags.input);
    json policy_json = json::parse(read_input(policy_path), nullptr, false);
    if (policy_json.is_discarded())
        throw ParseError("", "malformed policy file: " + policy_path);
    AbstentionPolicy policy = AbstentionPolicy::from_json(policy_json);

    std::string out;
    for (const ScoredRecord& sr : dataset.records) {
        Decision decision = decide(sr.scores, policy, sr.record.id);
        out += decision.to_json().dump() + "\n";
    }
    write_output(flags.out, out);
    return 0;
}

int cmd_synth(const CommonFlags& flags, const std::string& spec_path, uint64_t seed, bool seed_set) {
    json spec_json = json::parse(read_input(spec_path), nullptr, false);
    if (spec_json.is_discarded())
        throw ParseError("", "malformed synth spec: " + spec_path);
    SynthSpec spec = SynthSpec::from_json(spec_json);
    if (seed_set) spec.seed = seed;

    Dataset dataset = generate_synthetic(spec);
    std::string out;
    for (const GenerationRecord& record : dataset.records) out += serialize_record(record) + "\n";
    write_output(flags.out, out);
    return 0;
}

int cmd_serve(const CommonFlags& flags, const std::string& listen, const std::string& policy_path) {
    std::string policy_file = policy_path.empty() ? env_or("ABSTAIN_GATE_POLICY", "") : policy_path;
    if (policy_file.empty())
        throw ParseError("", "no policy file (flag --policy or env ABSTAIN_GATE_POLICY)");
    json policy_json = json::parse(read_input(policy_file), nullptr, false);
    if (policy_json.is_discarded())
        throw ParseError("", "malformed policy file: " + policy_file);

    GatewayConfig config;
    config.policy = AbstentionPolicy::from_json(policy_json);
    config.oracle = oracle_for(flags);
    config.oracle_is_remote = flags.oracle_backend == "remote";
    config.hedge_lexicon = hedge_lexicon_for(flags);
    config.scoring.compute_entropy = !flags.no_entropy;

    std::string address = listen.empty() ? env_or("ABSTAIN_GATE_LISTEN", "127.0.0.1:8080") : listen;
    size_t colon = address.rfind(':');
    if (colon == std::string::npos)
        throw ParseError("", "listen address must be host:port");
    config.listen_host = address.substr(0, colon);
    config.listen_port = std::stoi(address.substr(colon + 1));

    std::cerr << "listening on " << config.listen_host << ":" << config.listen_port << "\n";
    Gateway gateway(std::move(config));
    if (!gateway.listen())
        throw ParseError("", "cannot bind " + address);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uncertainty scoring and abstention toolkit for LLM QA records"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string task = "correctness";
    std::string csv_dir;
    std::string metric = "nll";
    std::string mode = "rejection-rate";
    double target = 0.05;
    std::string timestamp = "1970-01-01T00:00:00Z";
    std::string policy_path;
    std::string spec_path;
    std::string listen;
    uint64_t seed = 0;

    CLI::App* score = app.add_subcommand("score", "compute uncertainty scores per record");
    add_common_flags(score, flags, /*with_oracle=*/true);

    CLI::App* eval = app.add_subcommand("eval", "evaluate metric quality (AUROC/ROC/ARC)");
    add_common_flags(eval, flags, /*with_oracle=*/false);
    eval->add_option("--task", task, "correctness|hallucination|safety")
        ->check(CLI::IsMember({"correctness", "hallucination", "safety"}));
    eval->add_option("--csv-out", csv_dir, "directory for ROC/ARC CSV exports");

    CLI::App* calibrate = app.add_subcommand("calibrate", "derive an abstention threshold");
    add_common_flags(calibrate, flags, /*with_oracle=*/false);
    calibrate->add_option("--metric", metric, "nll|pe|se|num-sets|indu");
    calibrate->add_option("--mode", mode, "rejection-rate|false-abstention")
        ->check(CLI::IsMember({"rejection-rate", "false-abstention"}));
    calibrate->add_option("--target", target, "target rate / max false-abstention");
    calibrate->add_option("--task", task, "task for false-abstention labels")
        ->check(CLI::IsMember({"correctness", "hallucination", "safety"}));
    calibrate->add_option("--timestamp", timestamp, "policy timestamp ('now' for wall clock)");

    CLI::App* decide_cmd = app.add_subcommand("decide", "apply a policy to scored records");
    add_common_flags(decide_cmd, flags, /*with_oracle=*/false);
    decide_cmd->add_option("--policy", policy_path, "policy JSON file")->required();

    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic labeled dataset");
    add_common_flags(synth, flags, /*with_oracle=*/false);
    synth->add_option("--spec", spec_path, "synth spec JSON file")->required();
    CLI::Option* seed_opt = synth->add_option("--seed", seed, "override the spec seed");

    CLI::App* serve = app.add_subcommand("serve", "run the HTTP abstention gateway");
    add_common_flags(serve, flags, /*with_oracle=*/true);
    serve->add_option("--listen", listen, "host:port (default env ABSTAIN_GATE_LISTEN or 127.0.0.1:8080)");
    serve->add_option("--policy", policy_path, "policy JSON file (default env ABSTAIN_GATE_POLICY)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // CLI uses "num-sets" for the semantic-set count metric.
    if (metric == "num-sets") metric = "num_semantic_sets";

    try {
        if (score->parsed()) return cmd_score(flags);
        if (eval->parsed()) return cmd_eval(flags, task, csv_dir);
        if (calibrate->parsed()) return cmd_calibrate(flags, metric, mode, target, task, timestamp);
        if (decide_cmd->parsed()) return cmd_decide(flags, policy_path);
        if (synth->parsed()) return cmd_synth(flags, spec_path, seed, !seed_opt->empty());
        if (serve->parsed()) return cmd_serve(flags, listen, policy_path);
    } catch (const OracleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
