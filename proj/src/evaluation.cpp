#include "abstain/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace abstain {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_classes(const std::vector<ScoredItem>& items) {
    bool any_pos = false, any_neg = false;
    for (const ScoredItem& item : items) (item.positive ? any_pos : any_neg) = true;
    if (!any_pos || !any_neg)
        throw std::invalid_argument("need at least one positive and one negative item");
}

// Shortest round-trip number rendering, shared with the JSON output so CSV
// and report bytes stay consistent.
std::string render_number(double value) {
    if (value == kInf) return "inf";
    if (value == -kInf) return "-inf";
    return json(value).dump();
}

json threshold_json(double value) {
    if (value == kInf) return json("inf");
    if (value == -kInf) return json("-inf");
    return json(value);
}

}  // namespace

double auroc(const std::vector<ScoredItem>& items) {
    check_classes(items);
    std::vector<size_t> order(items.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return items[a].score < items[b].score; });

    // Midrank sum over positives.
    double rank_sum_pos = 0.0;
    long num_pos = 0, num_neg = 0;
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j < order.size() && items[order[j]].score == items[order[i]].score) ++j;
        double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (size_t k = i; k < j; ++k)
            if (items[order[k]].positive) rank_sum_pos += midrank;
        i = j;
    }
    for (const ScoredItem& item : items) (item.positive ? num_pos : num_neg)++;

    double np = static_cast<double>(num_pos);
    double nn = static_cast<double>(num_neg);
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

std::vector<RocPoint> roc_points(const std::vector<ScoredItem>& items) {
    check_classes(items);
    std::vector<double> thresholds;
    for (const ScoredItem& item : items) thresholds.push_back(item.score);
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    long num_pos = 0, num_neg = 0;
    for (const ScoredItem& item : items) (item.positive ? num_pos : num_neg)++;

    std::vector<RocPoint> points;
    for (double t : thresholds) {
        long tp = 0, fp = 0;
        for (const ScoredItem& item : items)
            if (item.score > t) (item.positive ? tp : fp)++;
        points.push_back({static_cast<double>(fp) / static_cast<double>(num_neg),
                          static_cast<double>(tp) / static_cast<double>(num_pos), t});
    }
    points.push_back({1.0, 1.0, -kInf});
    return points;
}

std::vector<ArcPoint> accuracy_rejection_curve(const std::vector<ArcItem>& items) {
    if (items.empty()) return {};
    std::vector<size_t> order(items.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (items[a].score != items[b].score) return items[a].score > items[b].score;
        return items[a].id < items[b].id;
    });

    const size_t n = items.size();
    // Suffix counts of acceptable items in rejection order.
    std::vector<long> acceptable_from(n + 1, 0);
    for (size_t i = n; i-- > 0;)
        acceptable_from[i] = acceptable_from[i + 1] + (items[order[i]].acceptable ? 1 : 0);

    std::vector<ArcPoint> points;
    for (size_t k = 0; k < n; ++k) {
        double threshold = k == 0 ? kInf : items[order[k - 1]].score;
        double accuracy = static_cast<double>(acceptable_from[k]) / static_cast<double>(n - k);
        points.push_back({static_cast<double>(k) / static_cast<double>(n), accuracy, threshold});
    }
    return points;
}

double auarc(const std::vector<ArcPoint>& points) {
    if (points.empty())
        throw std::invalid_argument("auarc: empty curve");
    if (points.size() == 1) return points.front().accuracy;
    double area = 0.0;
    for (size_t i = 1; i < points.size(); ++i) {
        double dx = points[i].rejection_rate - points[i - 1].rejection_rate;
        area += (points[i].accuracy + points[i - 1].accuracy) / 2.0 * dx;
    }
    double span = points.back().rejection_rate - points.front().rejection_rate;
    return area / span;
}

GroupMeansResult group_means(const std::vector<std::pair<UncertaintyScores, bool>>& scored) {
    if (scored.empty())
        throw std::invalid_argument("group_means: empty input");
    GroupMeansResult result;
    for (const std::string& metric : metric_names()) {
        double sum_pos = 0.0, sum_neg = 0.0;
        long n_pos = 0, n_neg = 0;
        bool present = false;
        for (const auto& [scores, positive] : scored) {
            std::optional<double> value = scores.metric_value(metric);
            if (!value) continue;
            present = true;
            if (positive) { sum_pos += *value; ++n_pos; }
            else { sum_neg += *value; ++n_neg; }
        }
        if (!present) continue;
        GroupStats stats;
        stats.count_positive = n_pos;
        stats.count_negative = n_neg;
        stats.mean_positive = n_pos > 0 ? sum_pos / static_cast<double>(n_pos) : 0.0;
        stats.mean_negative = n_neg > 0 ? sum_neg / static_cast<double>(n_neg) : 0.0;
        result.per_metric[metric] = stats;
    }
    for (const auto& [scores, positive] : scored) {
        auto& hist = positive ? result.indu_histogram_positive : result.indu_histogram_negative;
        hist[scores.indu]++;
    }
    return result;
}

EvalReport evaluate_dataset(const ScoredDataset& dataset, TaskKind task, const EvalConfig& config) {
    EvalReport report;
    report.task = task;
    report.dataset = dataset.source_path;
    report.num_records = static_cast<long>(dataset.size());

    std::vector<bool> positives;
    positives.reserve(dataset.size());
    for (const ScoredRecord& sr : dataset.records) {
        bool positive = derive_positive(sr.record, task, config.refusal);
        positives.push_back(positive);
        (positive ? report.num_positive : report.num_negative)++;
    }

    std::vector<std::pair<UncertaintyScores, bool>> scored;
    for (size_t i = 0; i < dataset.size(); ++i)
        scored.emplace_back(dataset.records[i].scores, positives[i]);
    GroupMeansResult means = group_means(scored);
    report.indu_histogram_positive = means.indu_histogram_positive;
    report.indu_histogram_negative = means.indu_histogram_negative;

    const bool with_arc = task != TaskKind::hallucination;
    for (const auto& [metric, stats] : means.per_metric) {
        // Only metrics present on every record are evaluated as rankers.
        bool complete = true;
        std::vector<ScoredItem> items;
        std::vector<ArcItem> arc_items;
        for (size_t i = 0; i < dataset.size(); ++i) {
            std::optional<double> value = dataset.records[i].scores.metric_value(metric);
            if (!value) { complete = false; break; }
            items.push_back({*value, positives[i]});
            arc_items.push_back({*value, !positives[i], dataset.records[i].record.id});
        }
        if (!complete) continue;

        MetricEval eval;
        eval.auroc = auroc(items);
        eval.roc = roc_points(items);
        if (with_arc) {
            eval.arc = accuracy_rejection_curve(arc_items);
            eval.auarc = auarc(eval.arc);
        }
        eval.groups = stats;
        report.metrics[metric] = std::move(eval);
    }
    return report;
}

json EvalReport::to_json() const {
    json j;
    j["task"] = task_name(task);
    j["dataset"] = dataset;
    j["num_records"] = num_records;
    j["num_positive"] = num_positive;
    j["num_negative"] = num_negative;

    json metrics_json = json::object();
    for (const auto& [name, eval] : metrics) {
        json m;
        m["auroc"] = eval.auroc;
        json roc = json::array();
        for (const RocPoint& p : eval.roc)
            roc.push_back({{"fpr", p.fpr}, {"tpr", p.tpr}, {"threshold", threshold_json(p.threshold)}});
        m["roc"] = std::move(roc);
        if (!eval.arc.empty()) {
            json arc = json::array();
            for (const ArcPoint& p : eval.arc)
                arc.push_back({{"rejection_rate", p.rejection_rate},
                               {"accuracy", p.accuracy},
                               {"threshold", threshold_json(p.threshold)}});
            m["arc"] = std::move(arc);
            m["auarc"] = eval.auarc;
        }
        m["mean_positive"] = eval.groups.mean_positive;
        m["mean_negative"] = eval.groups.mean_negative;
        m["count_positive"] = eval.groups.count_positive;
        m["count_negative"] = eval.groups.count_negative;
        metrics_json[name] = std::move(m);
    }
    j["metrics"] = std::move(metrics_json);

    json hist_pos = json::object(), hist_neg = json::object();
    for (const auto& [count, freq] : indu_histogram_positive)
        hist_pos[std::to_string(count)] = freq;
    for (const auto& [count, freq] : indu_histogram_negative)
        hist_neg[std::to_string(count)] = freq;
    j["indu_histogram"] = {{"positive", std::move(hist_pos)}, {"negative", std::move(hist_neg)}};
    return j;
}

std::string roc_csv(const std::vector<RocPoint>& points) {
    std::string out = "fpr,tpr,threshold\n";
    for (const RocPoint& p : points)
        out += render_number(p.fpr) + "," + render_number(p.tpr) + "," + render_number(p.threshold) + "\n";
    return out;
}

std::string arc_csv(const std::vector<ArcPoint>& points) {
    std::string out = "rejection_rate,accuracy,threshold\n";
    for (const ArcPoint& p : points)
        out += render_number(p.rejection_rate) + "," + render_number(p.accuracy) + "," +
               render_number(p.threshold) + "\n";
    return out;
}

}  // namespace abstain
