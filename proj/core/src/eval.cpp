#include "msmir/eval.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace msmir {

namespace {

// Precision at the rank of each relevant document, in rank order.
std::vector<double> precision_at_relevant(const RankedList& run, const std::set<std::string>& relevant) {
    std::vector<double> out;
    std::unordered_set<std::string_view> seen;
    std::size_t rank = 0;
    for (const auto& e : run.entries) {
        if (!seen.insert(e.doc_id).second) continue;
        ++rank;
        if (relevant.contains(e.doc_id))
            out.push_back(static_cast<double>(out.size() + 1) / static_cast<double>(rank));
    }
    return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.precision(10);
    return out;
}

} // namespace

std::optional<double> average_precision(const RankedList& run, const std::set<std::string>& relevant) {
    if (relevant.empty()) return std::nullopt;
    double sum = 0.0;
    for (double p : precision_at_relevant(run, relevant)) sum += p;
    return sum / static_cast<double>(relevant.size());
}

std::optional<InterpolatedCurve> interpolated_11pt(const RankedList& run, const std::set<std::string>& relevant) {
    if (relevant.empty()) return std::nullopt;
    const auto precisions = precision_at_relevant(run, relevant);
    const std::size_t r = relevant.size();
    InterpolatedCurve curve;
    for (std::size_t level = 0; level <= 10; ++level) {
        double best = 0.0;
        // The i-th relevant hit (1-based) reaches recall i / r; it qualifies
        // for level L when 10 * i >= L * r.
        for (std::size_t i = 0; i < precisions.size(); ++i)
            if (10 * (i + 1) >= level * r) best = std::max(best, precisions[i]);
        curve.values[level] = best;
        curve.average += best;
    }
    curve.average /= 11.0;
    return curve;
}

std::vector<WinCount> win_counts(const PerQueryScores& scores) {
    std::vector<WinCount> wins;
    if (scores.empty()) return wins;
    const auto& reference = scores.begin()->second;
    for (const auto& [method, per_query] : scores) {
        bool same = per_query.size() == reference.size() &&
                    std::equal(per_query.begin(), per_query.end(), reference.begin(),
                               [](const auto& a, const auto& b) { return a.first == b.first; });
        if (!same) throw std::invalid_argument("win_counts: method " + method + " covers a different query set");
        wins.push_back(WinCount{method, 0, 0.0});
    }
    for (const auto& [query, unused] : reference) {
        std::size_t leader = 0;
        double best = 0.0;
        bool unique = false;
        std::size_t m = 0;
        for (const auto& [method, per_query] : scores) {
            const double v = per_query.at(query);
            if (m == 0 || v > best) {
                best = v;
                leader = m;
                unique = true;
            } else if (v == best) {
                unique = false;
            }
            ++m;
        }
        if (unique) ++wins[leader].count;
    }
    const double total = static_cast<double>(reference.size());
    for (auto& w : wins) w.percent = total > 0.0 ? 100.0 * static_cast<double>(w.count) / total : 0.0;
    return wins;
}

EvalReport evaluate(const std::vector<MethodRuns>& methods, const Qrels& qrels) {
    EvalReport report;
    if (methods.empty()) return report;

    auto query_set = [](const MethodRuns& m) {
        std::set<std::string> ids;
        for (const auto& r : m.runs) ids.insert(r.query_id);
        return ids;
    };
    const auto queries = query_set(methods.front());
    for (const auto& m : methods)
        if (query_set(m) != queries)
            throw std::invalid_argument("evaluate: method " + m.method + " covers a different query set");

    for (const auto& q : queries)
        if (qrels.relevant_for(q).empty()) report.skipped_queries.push_back(q);

    std::set<std::string> mentioned;
    for (const auto& m : methods) {
        MethodSummary summary;
        summary.method = m.method;
        auto& ap_scores = report.average_precision[m.method];
        auto& interp_scores = report.interpolated_average[m.method];
        for (const auto& run : m.runs) {
            for (const auto& e : run.entries) mentioned.insert(e.doc_id);
            const auto& rel = qrels.relevant_for(run.query_id);
            const auto ap = average_precision(run, rel);
            const auto curve = interpolated_11pt(run, rel);
            if (!ap || !curve) continue;
            ap_scores[run.query_id] = *ap;
            interp_scores[run.query_id] = curve->average;
            summary.mean_average_precision += *ap;
            summary.mean_interpolated_11pt += curve->average;
            for (std::size_t i = 0; i < 11; ++i) summary.mean_curve[i] += curve->values[i];
            ++summary.evaluated_queries;
        }
        if (summary.evaluated_queries > 0) {
            const double n = static_cast<double>(summary.evaluated_queries);
            summary.mean_average_precision /= n;
            summary.mean_interpolated_11pt /= n;
            for (auto& v : summary.mean_curve) v /= n;
        }
        report.methods.push_back(summary);
    }
    for (const auto& q : queries)
        for (const auto& d : qrels.relevant_for(q))
            if (!mentioned.contains(d)) report.unknown_relevant_docs.push_back(d);
    std::sort(report.unknown_relevant_docs.begin(), report.unknown_relevant_docs.end());
    report.unknown_relevant_docs.erase(
        std::unique(report.unknown_relevant_docs.begin(), report.unknown_relevant_docs.end()),
        report.unknown_relevant_docs.end());

    report.wins = win_counts(report.average_precision);
    return report;
}

void write_eval_report(const EvalReport& report, const std::string& directory) {
    namespace fs = std::filesystem;
    const fs::path dir(directory);
    fs::create_directories(dir);

    {
        auto out = open_output(dir / "mean_precision.csv");
        out << "method,mean_average_precision,mean_interpolated_11pt,evaluated_queries\n";
        for (const auto& m : report.methods)
            out << m.method << ',' << m.mean_average_precision << ',' << m.mean_interpolated_11pt << ','
                << m.evaluated_queries << '\n';
    }
    {
        auto out = open_output(dir / "per_query_ap.csv");
        out << "query_id,method,average_precision,interpolated_11pt\n";
        for (const auto& [method, per_query] : report.average_precision)
            for (const auto& [query, ap] : per_query)
                out << query << ',' << method << ',' << ap << ','
                    << report.interpolated_average.at(method).at(query) << '\n';
    }
    {
        auto out = open_output(dir / "interpolated_11pt.csv");
        out << "method,recall,precision\n";
        for (const auto& m : report.methods)
            for (std::size_t i = 0; i < 11; ++i)
                out << m.method << ',' << static_cast<double>(i) / 10.0 << ',' << m.mean_curve[i] << '\n';
    }
    {
        auto out = open_output(dir / "win_counts.csv");
        out << "method,count,percent\n";
        for (const auto& w : report.wins) out << w.method << ',' << w.count << ',' << w.percent << '\n';
    }

    nlohmann::ordered_json summary;
    summary["metadata"] = report.metadata;
    for (const auto& m : report.methods) {
        summary["methods"].push_back({{"method", m.method},
                                      {"mean_average_precision", m.mean_average_precision},
                                      {"mean_interpolated_11pt", m.mean_interpolated_11pt},
                                      {"interpolated_curve", m.mean_curve},
                                      {"evaluated_queries", m.evaluated_queries}});
    }
    for (const auto& w : report.wins)
        summary["win_counts"].push_back({{"method", w.method}, {"count", w.count}, {"percent", w.percent}});
    summary["skipped_queries"] = report.skipped_queries;
    summary["unknown_relevant_docs"] = report.unknown_relevant_docs;
    auto out = open_output(dir / "summary.json");
    out << summary.dump(2) << '\n';
}

} // namespace msmir
