// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Cross-checks the library against the independent brute-force oracles in
// oracles.hpp, the bundled toy dataset goldens, and the installed CLI
// binary (path from ABSTAIN_CLI; data directory from ABSTAIN_DATA).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>

#include "abstain/batch.hpp"
#include "abstain/evaluation.hpp"
#include "abstain/gateway.hpp"
#include "abstain/policy.hpp"
#include "abstain/synth.hpp"
#include "abstain/text.hpp"
#include "oracles.hpp"

using namespace abstain;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string require_env(const char* name) {
    const char* value = std::getenv(name);
    if (!value) {
        std::cerr << "missing env var " << name << "\n";
        std::exit(2);
    }
    return value;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& command) {
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    std::array<char, 65536> buffer;
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<ScoredItem> random_instance(std::mt19937_64& rng) {
    // Small integer score grid to force ties; always at least one of each class.
    size_t n = 2 + rng() % 49;
    std::vector<ScoredItem> items;
    items.push_back({static_cast<double>(rng() % 8), true});
    items.push_back({static_cast<double>(rng() % 8), false});
    for (size_t i = 2; i < n; ++i)
        items.push_back({static_cast<double>(rng() % 8), rng() % 2 == 0});
    return items;
}

std::vector<oracles::Item> to_oracle(const std::vector<ScoredItem>& items) {
    std::vector<oracles::Item> out;
    for (const ScoredItem& it : items) out.push_back({it.score, it.positive});
    return out;
}

ResponseSample sample_of(const std::string& text, double log_prob) {
    return {text, {log_prob}};
}

// --- criteria -------------------------------------------------------------

void criterion_1_and_2() {
    std::mt19937_64 rng(101);
    std::vector<std::vector<ScoredItem>> instances;
    for (int i = 0; i < 200; ++i) instances.push_back(random_instance(rng));

    auto start = Clock::now();
    double worst_auroc = 0.0;
    for (const auto& items : instances)
        worst_auroc = std::max(worst_auroc,
                               std::abs(auroc(items) - oracles::auroc_pairs(to_oracle(items))));
    double elapsed = seconds_since(start);
    report(1, "AUROC oracle equivalence (200 instances, ties)",
           worst_auroc <= 1e-12 && elapsed < 1.0,
           "max deviation " + std::to_string(worst_auroc) + ", " + std::to_string(elapsed) + " s");

    double worst_area = 0.0;
    for (const auto& items : instances) {
        std::vector<RocPoint> roc = roc_points(items);
        double area = 0.0;
        for (size_t i = 1; i < roc.size(); ++i)
            area += (roc[i].tpr + roc[i - 1].tpr) / 2.0 * (roc[i].fpr - roc[i - 1].fpr);
        worst_area = std::max(worst_area, std::abs(area - auroc(items)));
    }
    report(2, "ROC trapezoid area equals AUROC", worst_area <= 1e-9,
           "max deviation " + std::to_string(worst_area));
}

void criterion_3() {
    std::mt19937_64 rng(103);
    AlwaysFalseOracle never;
    AlwaysTrueOracle always;
    bool ok = true;
    std::string detail;

    for (int iter = 0; iter < 50 && ok; ++iter) {
        std::vector<ResponseSample> samples;
        size_t n = 2 + rng() % 6;
        for (size_t i = 0; i < n; ++i)
            samples.push_back(sample_of("t" + std::to_string(i),
                                        -0.1 * static_cast<double>(1 + rng() % 40)));
        Clustering c = cluster_samples(never, "q", samples);
        if (std::abs(semantic_entropy(samples, c) - predictive_entropy(samples)) > 1e-12) {
            ok = false;
            detail = "always-false SE != PE";
        }
    }

    // Total sequence probability 1 in one cluster: SE = -log 1 = 0.
    std::vector<ResponseSample> unit = {sample_of("a", std::log(0.5)), sample_of("b", std::log(0.5))};
    Clustering one = cluster_samples(always, "q", unit);
    if (std::abs(semantic_entropy(unit, one)) > 1e-12) {
        ok = false;
        detail = "always-true unit mass SE != 0";
    }

    // Hand case {0.5, 0.25, 0.25} with clusters {1},{2,3}: SE = ln 2.
    std::vector<ResponseSample> hand = {sample_of("paris", std::log(0.5)),
                                        sample_of("rome", std::log(0.25)),
                                        sample_of("rome", std::log(0.25))};
    ExactOracle exact;
    Clustering hc = cluster_samples(exact, "q", hand);
    if (hc.num_clusters != 2 || std::abs(semantic_entropy(hand, hc) - std::log(2.0)) > 1e-12) {
        ok = false;
        detail = "hand case SE != ln 2";
    }
    report(3, "semantic-entropy degeneracies", ok, detail);
}

void criterion_4() {
    std::mt19937_64 rng(107);
    ExactOracle exact;
    JaccardOracle jaccard(0.5);
    const char* pool[] = {"paris", "Paris", "paris france", "rome", "rome italy",
                          "maybe rome", "the answer is paris", "no idea"};
    bool ok = true;
    std::string detail;

    for (int iter = 0; iter < 500 && ok; ++iter) {
        std::vector<ResponseSample> samples;
        size_t n = 2 + rng() % 8;
        for (size_t i = 0; i < n; ++i)
            samples.push_back(sample_of(pool[rng() % 8], -0.25 * static_cast<double>(1 + rng() % 12)));

        for (const EntailmentOracle* oracle : {static_cast<const EntailmentOracle*>(&exact),
                                               static_cast<const EntailmentOracle*>(&jaccard)}) {
            Clustering c = cluster_samples(*oracle, "q", samples);
            if (c.assignments.size() != n || static_cast<int>(c.cluster_log_probs.size()) != c.num_clusters) {
                ok = false;
                detail = "shape mismatch";
                break;
            }
            std::set<int> seen;
            for (int a : c.assignments) {
                if (a < 0 || a >= c.num_clusters) { ok = false; detail = "id out of range"; }
                seen.insert(a);
            }
            if (static_cast<int>(seen.size()) != c.num_clusters) {
                ok = false;
                detail = "cluster ids not contiguous";
            }
            std::vector<double> all;
            for (const ResponseSample& s : samples) all.push_back(s.sequence_log_prob());
            if (std::abs(oracles::lse(all) - oracles::lse(c.cluster_log_probs)) > 1e-12) {
                ok = false;
                detail = "mass not conserved";
            }
            if (!ok) break;
        }

        // Exact-oracle partition is a permutation-invariant set of sets.
        if (ok) {
            std::vector<ResponseSample> shuffled = samples;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            auto as_sets = [](const std::vector<ResponseSample>& ss, const Clustering& c) {
                std::vector<std::multiset<std::string>> groups(c.num_clusters);
                for (size_t i = 0; i < ss.size(); ++i)
                    groups[c.assignments[i]].insert(text::normalize(ss[i].text));
                return std::multiset<std::multiset<std::string>>(groups.begin(), groups.end());
            };
            Clustering ca = cluster_samples(exact, "q", samples);
            Clustering cb = cluster_samples(exact, "q", shuffled);
            if (as_sets(samples, ca) != as_sets(shuffled, cb)) {
                ok = false;
                detail = "exact partition not permutation-invariant";
            }
        }
    }
    report(4, "clustering validity and mass conservation (500 sets)", ok, detail);
}

void criterion_5(const std::string& cli) {
    const double targets[] = {0.5, oracles::normal_cdf(1.0 / std::sqrt(2.0)),
                              oracles::normal_cdf(2.0 / std::sqrt(2.0))};
    bool ok = true;
    std::string detail;

    // Closed form confirmed by an independent Monte Carlo estimate.
    for (int d = 0; d <= 2; ++d) {
        double mc = oracles::mc_two_gaussian_auroc(static_cast<double>(d), 2'000'000, 999 + d);
        if (std::abs(mc - targets[d]) > 0.005) {
            ok = false;
            detail = "MC oracle disagrees with closed form at d=" + std::to_string(d);
        }
    }

    for (int d = 0; d <= 2 && ok; ++d) {
        SynthSpec spec;
        spec.n_pos = spec.n_neg = 20000;
        spec.separation = static_cast<double>(d);
        spec.seed = 42 + static_cast<uint64_t>(d);
        Dataset data = generate_synthetic(spec);
        std::vector<ScoredItem> items;
        for (const GenerationRecord& r : data.records)
            items.push_back({-r.greedy.sequence_log_prob(), !*r.labels.answerable});
        double empirical = auroc(items);
        if (std::abs(empirical - targets[d]) > 0.01) {
            ok = false;
            detail = "d=" + std::to_string(d) + " AUROC " + std::to_string(empirical) +
                     " vs " + std::to_string(targets[d]);
        }
    }

    // End-to-end CLI pipeline under the 30 s budget.
    std::string tmp = std::filesystem::temp_directory_path() / "abstain_accept";
    std::filesystem::create_directories(tmp);
    std::string spec_path = tmp + "/synth_spec.json";
    {
        std::ofstream out(spec_path);
        out << R"({"n_pos":20000,"n_neg":20000,"separation":1.0,"seed":7})";
    }
    auto start = Clock::now();
    RunResult res = run(cli + " synth --spec " + spec_path + " | " + cli +
                        " score --no-entropy - | " + cli + " eval --task hallucination -");
    double elapsed = seconds_since(start);
    if (res.exit_code != 0) {
        ok = false;
        detail = "pipeline exit code " + std::to_string(res.exit_code);
    } else if (elapsed >= 30.0) {
        ok = false;
        detail = "pipeline took " + std::to_string(elapsed) + " s";
    } else if (ok) {
        json report_json = json::parse(res.output, nullptr, false);
        double reported = report_json.is_discarded()
                              ? -1.0
                              : report_json["metrics"]["nll"]["auroc"].get<double>();
        if (std::abs(reported - targets[1]) > 0.01) {
            ok = false;
            detail = "pipeline AUROC " + std::to_string(reported);
        }
    }
    report(5, "synthetic AUROC recovery and < 30 s pipeline", ok, detail);
}

void criterion_6() {
    std::vector<ArcItem> hand = {{4.0, false, "a"}, {3.0, false, "b"},
                                 {2.0, true, "c"}, {1.0, true, "d"}};
    std::vector<ArcPoint> arc = accuracy_rejection_curve(hand);
    bool ok = arc.size() == 4 &&
              arc[0].rejection_rate == 0.0 && arc[0].accuracy == 0.5 &&
              arc[1].rejection_rate == 0.25 && arc[1].accuracy == 2.0 / 3.0 &&
              arc[2].rejection_rate == 0.5 && arc[2].accuracy == 1.0 &&
              arc[3].rejection_rate == 0.75 && arc[3].accuracy == 1.0;
    std::string detail = ok ? "" : "hand points mismatch";

    double area = auarc(arc);
    if (std::abs(area - 0.80556) > 1e-5) {
        ok = false;
        detail = "AUARC " + std::to_string(area);
    }
    if (std::abs(area - oracles::auarc_trapezoid(
                             {{0.0, 0.5, 0}, {0.25, 2.0 / 3.0, 0}, {0.5, 1.0, 0}, {0.75, 1.0, 0}})) >
        1e-12) {
        ok = false;
        detail = "AUARC oracle mismatch";
    }

    // A score that perfectly ranks the unacceptable items first gives a
    // monotone nondecreasing accuracy curve.
    std::mt19937_64 rng(109);
    for (int iter = 0; iter < 100 && ok; ++iter) {
        size_t n = 2 + rng() % 30;
        std::vector<ArcItem> items;
        for (size_t i = 0; i < n; ++i) {
            bool acceptable = rng() % 2 == 0;
            items.push_back({acceptable ? 0.0 : 1.0, acceptable, "i" + std::to_string(i)});
        }
        std::vector<ArcPoint> curve = accuracy_rejection_curve(items);
        for (size_t i = 1; i < curve.size(); ++i)
            if (curve[i].accuracy < curve[i - 1].accuracy - 1e-15) {
                ok = false;
                detail = "oracle-score ARC not monotone";
            }
    }
    report(6, "ARC/AUARC hand case and monotonicity", ok, detail);
}

void criterion_7() {
    std::mt19937_64 rng(113);
    bool ok = true;
    std::string detail;

    for (int iter = 0; iter < 100 && ok; ++iter) {
        size_t n = 2 + rng() % 40;
        std::vector<double> scores;
        for (size_t i = 0; i < n; ++i) scores.push_back(static_cast<double>(rng() % 24) / 4.0);
        double target = static_cast<double>(rng() % 100) / 101.0;
        AbstentionPolicy policy = calibrate_rejection_rate(scores, target, "nll");

        long rejected = 0;
        for (double s : scores)
            if (s > policy.threshold) ++rejected;
        double rate = static_cast<double>(rejected) / static_cast<double>(n);
        double best = 0.0;
        for (double candidate : scores) {
            long above = 0;
            for (double s : scores)
                if (s > candidate) ++above;
            double r = static_cast<double>(above) / static_cast<double>(n);
            if (r <= target) best = std::max(best, r);
        }
        if (rate > target || rate != best) {
            ok = false;
            detail = "rejection-rate policy not maximal under the target";
        }
    }

    for (int iter = 0; iter < 100 && ok; ++iter) {
        size_t n = 2 + rng() % 40;
        std::vector<ScoredItem> items;
        items.push_back({static_cast<double>(rng() % 24) / 4.0, false});
        for (size_t i = 1; i < n; ++i)
            items.push_back({static_cast<double>(rng() % 24) / 4.0, rng() % 2 == 0});
        double max_far = static_cast<double>(rng() % 101) / 100.0;
        AbstentionPolicy policy = calibrate_false_abstention(items, max_far, "nll");

        long fa = 0, nn = 0;
        for (const ScoredItem& it : items) {
            if (it.positive) continue;
            ++nn;
            if (it.score > policy.threshold) ++fa;
        }
        if (static_cast<double>(fa) / static_cast<double>(nn) > max_far) {
            ok = false;
            detail = "false-abstention policy exceeds max_far";
        }
    }
    report(7, "calibration self-consistency (100 + 100 instances)", ok, detail);
}

void criterion_8() {
    const RefusalLexicon& refusal = default_refusal_lexicon();
    struct EmCase {
        const char* response;
        std::vector<std::string> refs;
        bool expected;
    };
    const EmCase em_cases[] = {
        {"The answer is Paris.", {"paris"}, true},
        {"the thesis is long", {"is"}, true},     // the standalone "is" matches
        {"my thesis", {"is"}, false},             // "is" inside "thesis" does not
        {"parisian nights", {"paris"}, false},
        {"PARIS,  france", {"Paris"}, true},
        {"", {"paris"}, false},
    };
    bool ok = true;
    std::string detail;
    for (const EmCase& c : em_cases)
        if (fuzzy_exact_match(c.response, c.refs) != c.expected) {
            ok = false;
            detail = std::string("fuzzy EM vector failed: '") + c.response + "'";
        }
    try {
        fuzzy_exact_match("something", {});
        ok = false;
        detail = "empty reference list accepted";
    } catch (const std::invalid_argument&) {
    }

    const std::pair<const char*, bool> safe_cases[] = {
        {"I cannot help with that request.", true},
        {"I'm sorry, but no.", true},
        {"Sure! Step one:", false},
        {"", false},
        {"you cannotate this", false},
    };
    for (const auto& [response, expected] : safe_cases)
        if (keyword_safe(response, refusal) != expected) {
            ok = false;
            detail = std::string("keyword safety vector failed: '") + response + "'";
        }

    std::mt19937_64 rng(127);
    for (int i = 0; i < 1000 && ok; ++i) {
        std::string s;
        size_t len = rng() % 60;
        const char alphabet[] = " \t\n  abcXYZ09'!,.\xc3\xa9";
        for (size_t j = 0; j < len; ++j) s += alphabet[rng() % (sizeof(alphabet) - 1)];
        if (normalize(normalize(s)) != normalize(s)) {
            ok = false;
            detail = "normalize not idempotent";
        }
    }
    report(8, "labeling contracts (fuzzy EM, keyword safety, normalize)", ok, detail);
}

void criterion_9() {
    const HedgeLexicon& hedges = default_hedge_lexicon();
    const std::pair<const char*, long> vectors[] = {
        {"I think it might be Paris, maybe.", 3},
        {"maybe maybe maybe", 3},
        {"It seems unclear.", 2},          // multi-word "it seems" plus "unclear"
        {"I am not sure about this.", 1},  // multi-word "not sure"
        {"mightier things happened", 0},   // no boundary match inside "mightier"
        {"The capital is Paris.", 0},
        {"", 0},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [response, expected] : vectors)
        if (count_hedges(response, hedges) != expected) {
            ok = false;
            detail = std::string("InDU vector failed: '") + response + "' -> " +
                     std::to_string(count_hedges(response, hedges));
        }

    // Injected hedge rates: the unanswerable group mean should exceed twice
    // the answerable group mean (documented reference shape 4.79 vs 1.92).
    SynthSpec spec;
    spec.n_pos = spec.n_neg = 5000;
    spec.separation = 1.0;
    spec.hedge_rate_pos = 4.79;
    spec.hedge_rate_neg = 1.92;
    spec.seed = 17;
    Dataset data = generate_synthetic(spec);
    double sum_pos = 0.0, sum_neg = 0.0;
    long n_pos = 0, n_neg = 0;
    for (const GenerationRecord& r : data.records) {
        long hedge_count = count_hedges(r.greedy.text, hedges);
        if (*r.labels.answerable) {
            sum_neg += static_cast<double>(hedge_count);
            ++n_neg;
        } else {
            sum_pos += static_cast<double>(hedge_count);
            ++n_pos;
        }
    }
    double mean_pos = sum_pos / static_cast<double>(n_pos);
    double mean_neg = sum_neg / static_cast<double>(n_neg);
    if (!(mean_pos > 2.0 * mean_neg)) {
        ok = false;
        detail = "group means " + std::to_string(mean_pos) + " vs " + std::to_string(mean_neg);
    }
    report(9, "InDU contract and hedge-rate group separation", ok, detail);
}

void criterion_10(const std::string& cli, const std::string& data_dir) {
    std::string toy = data_dir + "/toy_dataset.jsonl";
    std::string golden = data_dir + "/golden";
    bool ok = true;
    std::string detail;

    std::string golden_scored = slurp(golden + "/scored.jsonl");
    for (int threads : {1, 4}) {
        RunResult scored = run(cli + " score --oracle exact --parallel " +
                               std::to_string(threads) + " < " + toy);
        if (scored.exit_code != 0 || scored.output != golden_scored) {
            ok = false;
            detail = "scored output differs from golden at --parallel " + std::to_string(threads);
        }
    }

    if (ok) {
        RunResult eval = run(cli + " eval --task correctness < " + golden + "/scored.jsonl");
        if (eval.exit_code != 0 || eval.output != slurp(golden + "/report.json")) {
            ok = false;
            detail = "eval report differs from golden";
        }
    }
    if (ok) {
        RunResult calib = run(cli + " calibrate --metric nll --mode rejection-rate --target 0.25 < " +
                              golden + "/scored.jsonl");
        if (calib.exit_code != 0 || calib.output != slurp(golden + "/policy.json")) {
            ok = false;
            detail = "policy differs from golden";
        }
    }
    if (ok) {
        RunResult decisions = run(cli + " decide --policy " + golden + "/policy.json < " +
                                  golden + "/scored.jsonl");
        if (decisions.exit_code != 0 || decisions.output != slurp(golden + "/decisions.jsonl")) {
            ok = false;
            detail = "decisions differ from golden";
        }
    }
    report(10, "golden pipeline byte-for-byte, --parallel {1,4}", ok, detail);
}

void criterion_11(const std::string& data_dir) {
    bool ok = true;
    std::string detail;

    json policy_json = json::parse(slurp(data_dir + "/golden/policy.json"));
    GatewayConfig config;
    config.policy = AbstentionPolicy::from_json(policy_json);
    config.oracle = std::make_shared<ExactOracle>();
    config.hedge_lexicon = default_hedge_lexicon();
    Gateway gateway(std::move(config));
    int port = gateway.start_async();
    httplib::Client client("127.0.0.1", port);

    // Per-record parity with the golden CLI outputs after canonical
    // re-serialization on both sides.
    std::istringstream scored_lines(slurp(data_dir + "/golden/scored.jsonl"));
    std::istringstream decision_lines(slurp(data_dir + "/golden/decisions.jsonl"));
    std::string scored_line, decision_line;
    int compared = 0;
    while (std::getline(scored_lines, scored_line) && std::getline(decision_lines, decision_line)) {
        json expected = json::parse(scored_line);
        json record = expected;
        record.erase("scores");

        auto score_res = client.Post("/v1/score", record.dump(), "application/json");
        if (!score_res || score_res->status != 200 ||
            json::parse(score_res->body).dump() != expected["scores"].dump()) {
            ok = false;
            detail = "score parity failed for " + record["id"].get<std::string>();
            break;
        }
        auto decide_res = client.Post("/v1/decide", record.dump(), "application/json");
        if (!decide_res || decide_res->status != 200 ||
            json::parse(decide_res->body).dump() != json::parse(decision_line).dump()) {
            ok = false;
            detail = "decide parity failed for " + record["id"].get<std::string>();
            break;
        }
        ++compared;
    }
    if (ok && compared != 12) {
        ok = false;
        detail = "expected 12 records, compared " + std::to_string(compared);
    }

    if (ok) {
        auto bad = client.Post("/v1/score", "{ not json", "application/json");
        if (!bad || bad->status != 400) {
            ok = false;
            detail = "malformed body did not return 400";
        }
    }
    gateway.stop();

    if (ok) {
        RemoteOracleConfig remote;
        remote.url = "http://127.0.0.1:1/nli";
        remote.timeout_seconds = 0.2;
        remote.retries = 0;
        GatewayConfig dead;
        dead.policy.metric = "se";
        dead.policy.threshold = 1.0;
        dead.oracle = std::make_shared<RemoteNliOracle>(remote);
        dead.oracle_is_remote = true;
        dead.hedge_lexicon = default_hedge_lexicon();
        Gateway dead_gateway(std::move(dead));
        int dead_port = dead_gateway.start_async();
        httplib::Client dead_client("127.0.0.1", dead_port);
        auto health = dead_client.Get("/healthz");
        if (!health || health->status != 503) {
            ok = false;
            detail = "dead NLI endpoint with SE policy did not give 503 on /healthz";
        }
        dead_gateway.stop();
    }
    report(11, "gateway parity with CLI outputs, 400/503 paths", ok, detail);
}

void criterion_12() {
    std::mt19937_64 rng(131);
    const char* pool[] = {"paris", "Paris", "paris france", "rome", "rome italy",
                          "madrid", "berlin", "no idea"};
    Dataset data;
    data.source_path = "bench";
    for (int i = 0; i < 10000; ++i) {
        GenerationRecord r;
        r.id = "r" + std::to_string(i);
        r.prompt = "capital";
        r.greedy = {pool[rng() % 8], {-0.25 * static_cast<double>(1 + rng() % 8)}};
        for (int s = 0; s < 10; ++s)
            r.samples.push_back({pool[rng() % 8], {-0.5 * static_cast<double>(1 + rng() % 6)}});
        data.records.push_back(std::move(r));
    }

    ExactOracle oracle;
    auto start = Clock::now();
    ScoredDataset scored = score_dataset_parallel(data, oracle, default_hedge_lexicon(), {}, 4);
    double elapsed = seconds_since(start);
    report(12, "throughput: 10 000 records x 10 samples in < 10 s",
           scored.records.size() == 10000 && elapsed < 10.0,
           std::to_string(elapsed) + " s");
}

}  // namespace

int main() {
    std::string cli = require_env("ABSTAIN_CLI");
    std::string data_dir = require_env("ABSTAIN_DATA");

    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5(cli);
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli, data_dir);
    criterion_11(data_dir);
    criterion_12();

    if (failures > 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
