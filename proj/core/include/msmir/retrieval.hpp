#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msmir/msm.hpp"
#include "msmir/svd.hpp"
#include "msmir/textprep.hpp"

namespace msmir {

/// Raw term-frequency query vector over a corpus vocabulary.
struct Query {
    std::string id;
    SparseVector vector;
    std::size_t vocabulary_size = 0;
    std::uint64_t vocabulary_fingerprint = 0;
    /// Tokens that were not in the vocabulary.
    std::size_t dropped_terms = 0;
};

Query make_query(std::string id, std::string_view text, const Vocabulary& vocab, const PrepConfig& cfg);

struct RankedEntry {
    std::size_t doc_index;
    std::string doc_id;
    double score;

    friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

/// Documents by descending score; ties broken by ascending document index.
struct RankedList {
    std::string query_id;
    std::vector<RankedEntry> entries;

    friend bool operator==(const RankedList&, const RankedList&) = default;
};

/// Sort (doc_index, score) pairs into a RankedList with the fixed tie-break.
RankedList rank_scores(std::string query_id, const std::vector<double>& scores,
                       const std::vector<std::string>& doc_ids);

/// Cosine of every tdm column against the query. Throws std::invalid_argument
/// when the query was built over a different vocabulary.
RankedList score_cosine(const Tdm& tdm, const Query& q);

enum class LsiQueryProjection : std::uint8_t {
    /// q' = U_k^T q, compared against Sigma_k V_k^T columns.
    project,
    /// q' = Sigma_k^{-1} U_k^T q, compared against V_k^T columns.
    fold_in,
};

struct LsiIndex {
    Index k = 0;
    DenseMatrix U;            // m x k
    DenseVector sigma;        // k
    DenseMatrix projected_docs;  // k x n, Sigma_k V_k^T
    std::vector<std::string> doc_ids;
    std::uint64_t vocabulary_fingerprint = 0;
    LsiQueryProjection projection = LsiQueryProjection::project;
};

/// Requires 1 <= k <= min(m, n); solver failures propagate.
LsiIndex build_lsi_index(const Tdm& tdm, Index k, const SvdsOptions& options = {},
                         LsiQueryProjection projection = LsiQueryProjection::project);

RankedList score_lsi(const LsiIndex& index, const Query& q);

/// "query_id Q0 doc_id rank score run_tag" lines, rank from 1.
void write_trec_run(std::ostream& out, const std::vector<RankedList>& runs, const std::string& tag);
/// Entries per query in file order; queries ordered by first appearance.
std::vector<RankedList> read_trec_run(std::istream& in, const std::string& source = "<stream>");
std::vector<RankedList> read_trec_run_file(const std::string& path);

} // namespace msmir
