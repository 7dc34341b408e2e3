#include "msmir/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "msmir/error.hpp"

namespace msmir {

Query make_query(std::string id, std::string_view text, const Vocabulary& vocab, const PrepConfig& cfg) {
    Query q;
    q.id = std::move(id);
    q.vocabulary_size = vocab.size();
    q.vocabulary_fingerprint = vocab.fingerprint();
    std::map<TermId, double> counts;
    for (const auto& sentence : split_sentences(text)) {
        for (const auto& token : tokenize(sentence, cfg)) {
            if (auto t = vocab.find(token))
                counts[*t] += 1.0;
            else
                ++q.dropped_terms;
        }
    }
    for (const auto& [t, c] : counts) {
        q.vector.indices.push_back(static_cast<Index>(t));
        q.vector.values.push_back(c);
    }
    return q;
}

RankedList rank_scores(std::string query_id, const std::vector<double>& scores,
                       const std::vector<std::string>& doc_ids) {
    if (scores.size() != doc_ids.size()) throw std::invalid_argument("rank_scores: size mismatch");
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    RankedList list;
    list.query_id = std::move(query_id);
    list.entries.reserve(order.size());
    for (auto i : order) list.entries.push_back(RankedEntry{i, doc_ids[i], scores[i]});
    return list;
}

RankedList score_cosine(const Tdm& tdm, const Query& q) {
    if (q.vocabulary_size != static_cast<std::size_t>(tdm.matrix.rows()) ||
        q.vocabulary_fingerprint != tdm.vocabulary_fingerprint)
        throw std::invalid_argument("score_cosine: query vocabulary does not match the index");
    const double qnorm = q.vector.norm();
    std::vector<double> scores(static_cast<std::size_t>(tdm.matrix.cols()), 0.0);
    if (qnorm > 0.0) {
        const DenseVector dense_q = q.vector.to_dense(tdm.matrix.rows());
        for (Index j = 0; j < tdm.matrix.cols(); ++j) {
            const double norm = tdm.column_norms[static_cast<std::size_t>(j)];
            if (norm == 0.0) continue;
            auto rows = tdm.matrix.column_rows(j);
            auto vals = tdm.matrix.column_values(j);
            double dot = 0.0;
            for (std::size_t p = 0; p < rows.size(); ++p) dot += vals[p] * dense_q(rows[p]);
            scores[static_cast<std::size_t>(j)] = std::clamp(dot / (norm * qnorm), -1.0, 1.0);
        }
    }
    return rank_scores(q.id, scores, tdm.doc_ids);
}

LsiIndex build_lsi_index(const Tdm& tdm, Index k, const SvdsOptions& options, LsiQueryProjection projection) {
    const SvdResult svd = svds_sparse(tdm.matrix, k, options);
    LsiIndex index;
    index.k = k;
    index.U = svd.U;
    index.sigma = svd.sigma;
    index.projected_docs = svd.sigma.asDiagonal() * svd.V.transpose();
    index.doc_ids = tdm.doc_ids;
    index.vocabulary_fingerprint = tdm.vocabulary_fingerprint;
    index.projection = projection;
    return index;
}

RankedList score_lsi(const LsiIndex& index, const Query& q) {
    if (q.vocabulary_size != static_cast<std::size_t>(index.U.rows()) ||
        q.vocabulary_fingerprint != index.vocabulary_fingerprint)
        throw std::invalid_argument("score_lsi: query vocabulary does not match the index");
    DenseVector projected = DenseVector::Zero(index.k);
    for (std::size_t p = 0; p < q.vector.nnz(); ++p)
        projected += q.vector.values[p] * index.U.row(q.vector.indices[p]).transpose();

    const Index n = index.projected_docs.cols();
    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    if (index.projection == LsiQueryProjection::project) {
        for (Index j = 0; j < n; ++j)
            scores[static_cast<std::size_t>(j)] = cosine(projected, DenseVector(index.projected_docs.col(j)));
    } else {
        for (Index i = 0; i < index.k; ++i) projected(i) = index.sigma(i) > 0.0 ? projected(i) / index.sigma(i) : 0.0;
        for (Index j = 0; j < n; ++j) {
            DenseVector v = index.projected_docs.col(j);
            for (Index i = 0; i < index.k; ++i) v(i) = index.sigma(i) > 0.0 ? v(i) / index.sigma(i) : 0.0;
            scores[static_cast<std::size_t>(j)] = cosine(projected, v);
        }
    }
    return rank_scores(q.id, scores, index.doc_ids);
}

void write_trec_run(std::ostream& out, const std::vector<RankedList>& runs, const std::string& tag) {
    const auto old = out.precision(17);
    for (const auto& run : runs) {
        std::size_t rank = 1;
        for (const auto& e : run.entries)
            out << run.query_id << " Q0 " << e.doc_id << ' ' << rank++ << ' ' << e.score << ' ' << tag << '\n';
    }
    out.precision(old);
}

std::vector<RankedList> read_trec_run(std::istream& in, const std::string& source) {
    std::vector<RankedList> runs;
    std::map<std::string, std::size_t> position;
    std::map<std::string, std::vector<std::pair<long, RankedEntry>>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string qid, q0, doc, tag;
        long rank = 0;
        double score = 0.0;
        if (!(fields >> qid)) continue;
        if (!(fields >> q0 >> doc >> rank >> score)) throw ParseError(source, lineno, "expected TREC run line");
        if (!position.contains(qid)) {
            position.emplace(qid, runs.size());
            runs.push_back(RankedList{qid, {}});
        }
        auto& r = rows[qid];
        r.emplace_back(rank, RankedEntry{r.size(), doc, score});
    }
    for (auto& run : runs) {
        auto& r = rows[run.query_id];
        std::stable_sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [rank, entry] : r) run.entries.push_back(std::move(entry));
    }
    return runs;
}

std::vector<RankedList> read_trec_run_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open run file: " + path);
    return read_trec_run(in, path);
}

} // namespace msmir
