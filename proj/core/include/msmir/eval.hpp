#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "msmir/retrieval.hpp"
#include "msmir/smart_format.hpp"

namespace msmir {

/// Non-interpolated average precision: mean precision at the rank of each
/// relevant document; relevant documents missing from the run contribute 0.
/// nullopt when `relevant` is empty.
std::optional<double> average_precision(const RankedList& run, const std::set<std::string>& relevant);

struct InterpolatedCurve {
    /// Precision at recall 0.0, 0.1, ..., 1.0.
    std::array<double, 11> values{};
    double average = 0.0;
};

/// p(x) = max precision over cutoffs whose recall is at least x.
std::optional<InterpolatedCurve> interpolated_11pt(const RankedList& run, const std::set<std::string>& relevant);

struct WinCount {
    std::string method;
    std::size_t count = 0;
    double percent = 0.0;
};

/// Per-method per-query scores: method -> (query id -> metric value).
using PerQueryScores = std::map<std::string, std::map<std::string, double>>;

/// A method wins a query when its score strictly exceeds every other method's.
/// Throws std::invalid_argument when the methods cover different query sets.
std::vector<WinCount> win_counts(const PerQueryScores& scores);

/// Runs for one method.
struct MethodRuns {
    std::string method;
    std::vector<RankedList> runs;
};

struct MethodSummary {
    std::string method;
    double mean_average_precision = 0.0;
    double mean_interpolated_11pt = 0.0;
    std::array<double, 11> mean_curve{};
    std::size_t evaluated_queries = 0;
};

struct EvalReport {
    std::vector<MethodSummary> methods;
    PerQueryScores average_precision;
    PerQueryScores interpolated_average;
    std::vector<WinCount> wins;
    /// Queries with no relevant document; excluded from every mean.
    std::vector<std::string> skipped_queries;
    /// Relevant document ids that no run ever mentions.
    std::vector<std::string> unknown_relevant_docs;
    std::map<std::string, std::string> metadata;
};

/// Evaluates every method on the query ids present in its runs. All methods
/// must cover the same query set.
EvalReport evaluate(const std::vector<MethodRuns>& methods, const Qrels& qrels);

/// Writes mean_precision.csv, per_query_ap.csv, interpolated_11pt.csv,
/// win_counts.csv and summary.json into `directory`.
void write_eval_report(const EvalReport& report, const std::string& directory);

} // namespace msmir
