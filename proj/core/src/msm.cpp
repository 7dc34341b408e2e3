#include "msmir/msm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msmir/parallel.hpp"
#include "msmir/svd.hpp"

namespace msmir {

KPrime::KPrime(std::size_t k) : value_(k) {
    if (k < 1) throw std::invalid_argument("k' must be >= 1");
}

std::string KPrime::to_string() const {
    return is_full_rank() ? std::string("full") : std::to_string(value_);
}

std::string Tdm::describe() const {
    return kind == TdmKind::vsm ? std::string("vsm") : "pseudo(k'=" + kprime.to_string() + ")";
}

void WeightingHooks::validate(const Corpus& corpus) const {
    if (global) {
        if (global->size() != corpus.vocabulary.size())
            throw std::invalid_argument("global weights must have one entry per vocabulary term");
        for (double g : *global)
            if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("global weights must be positive");
    }
    if (local) {
        if (local->size() != corpus.documents.size())
            throw std::invalid_argument("local weights must have one list per document");
        for (std::size_t d = 0; d < local->size(); ++d) {
            if ((*local)[d].size() != corpus.documents[d].sentences.size())
                throw std::invalid_argument("local weights of document " + corpus.documents[d].id +
                                            " must have one entry per sentence");
            for (double p : (*local)[d])
                if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("local weights must be positive");
        }
    }
}

Tsm build_tsm(const CorpusDocument& doc, const Vocabulary& vocab) {
    std::vector<SparseVector> columns;
    columns.reserve(doc.sentences.size());
    for (const auto& s : doc.sentences) {
        SparseVector c;
        c.indices.reserve(s.counts.size());
        c.values.reserve(s.counts.size());
        for (const auto& [term, count] : s.counts) {
            if (term >= vocab.size()) throw std::out_of_range("sentence term outside vocabulary in " + doc.id);
            c.indices.push_back(static_cast<Index>(term));
            c.values.push_back(static_cast<double>(count));
        }
        columns.push_back(std::move(c));
    }
    return Tsm{doc.id, SparseMatrix::from_columns(static_cast<Index>(vocab.size()), columns)};
}

SparseVector approx_doc_vector(const Tsm& tsm, KPrime kprime, std::span<const double> global,
                               std::span<const double> local, double rank_tol) {
    const SparseMatrix& s = tsm.matrix;
    const Index t = s.cols();
    if (!global.empty() && static_cast<Index>(global.size()) != s.rows())
        throw std::invalid_argument("global weights do not match tsm rows");
    if (!local.empty() && static_cast<Index>(local.size()) != t)
        throw std::invalid_argument("local weights do not match tsm columns");
    if (t == 0) return {};

    // Rows the document actually uses; every other row of the result is zero.
    std::vector<Index> support(s.row_indices().begin(), s.row_indices().end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const Index rows = static_cast<Index>(support.size());
    auto local_row = [&](Index r) {
        return static_cast<Index>(std::lower_bound(support.begin(), support.end(), r) - support.begin());
    };
    auto weight = [&](Index col) { return local.empty() ? 1.0 : local[static_cast<std::size_t>(col)]; };

    DenseVector result = DenseVector::Zero(rows);
    bool exact = kprime.clamp(static_cast<std::size_t>(std::min(rows, t))) ==
                 static_cast<std::size_t>(std::min(rows, t));
    if (!exact) {
        DenseMatrix dense = DenseMatrix::Zero(rows, t);
        for (Index j = 0; j < t; ++j) {
            auto r = s.column_rows(j);
            auto v = s.column_values(j);
            for (std::size_t p = 0; p < r.size(); ++p) dense(local_row(r[p]), j) = v[p];
        }
        const SvdResult svd = svd_dense(dense);
        const Index rank = numerical_rank(svd.sigma, rows, t, rank_tol);
        const Index keep = static_cast<Index>(kprime.clamp(static_cast<std::size_t>(rank)));
        if (keep == rank) {
            exact = true;
        } else {
            DenseVector p(t);
            for (Index j = 0; j < t; ++j) p(j) = weight(j);
            const DenseVector coeff = svd.sigma.head(keep).cwiseProduct(svd.V.leftCols(keep).transpose() * p);
            result = svd.U.leftCols(keep) * coeff;
        }
    }
    if (exact) {
        for (Index j = 0; j < t; ++j) {
            auto r = s.column_rows(j);
            auto v = s.column_values(j);
            const double w = weight(j);
            for (std::size_t p = 0; p < r.size(); ++p) result(local_row(r[p])) += v[p] * w;
        }
    }

    SparseVector out;
    out.indices.reserve(support.size());
    out.values.reserve(support.size());
    for (Index i = 0; i < rows; ++i) {
        double v = result(i);
        if (!global.empty()) v *= global[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])];
        if (v == 0.0) continue;
        out.indices.push_back(support[static_cast<std::size_t>(i)]);
        out.values.push_back(v);
    }
    return out;
}

namespace {

Tdm assemble(const Corpus& corpus, KPrime kprime, TdmKind kind, const WeightingHooks& hooks,
             const MsmOptions& options) {
    hooks.validate(corpus);
    const auto& vocab = corpus.vocabulary;
    std::vector<SparseVector> columns(corpus.documents.size());
    std::span<const double> global;
    if (hooks.global) global = *hooks.global;
    parallel_for(corpus.documents.size(), options.threads, [&](std::size_t j) {
        std::span<const double> local;
        if (hooks.local) local = (*hooks.local)[j];
        const Tsm tsm = build_tsm(corpus.documents[j], vocab);
        SparseVector col = approx_doc_vector(tsm, kprime, global, local, options.rank_tol);
        const double cutoff = 1e-12 * col.norm();
        std::size_t w = 0;
        for (std::size_t i = 0; i < col.nnz(); ++i) {
            if (std::abs(col.values[i]) <= cutoff) continue;
            col.indices[w] = col.indices[i];
            col.values[w] = col.values[i];
            ++w;
        }
        col.indices.resize(w);
        col.values.resize(w);
        columns[j] = std::move(col);
    });

    Tdm tdm;
    tdm.matrix = SparseMatrix::from_columns(static_cast<Index>(vocab.size()), columns);
    tdm.doc_ids.reserve(corpus.documents.size());
    for (const auto& d : corpus.documents) tdm.doc_ids.push_back(d.id);
    tdm.kind = kind;
    tdm.kprime = kprime;
    tdm.column_norms = tdm.matrix.column_norms();
    tdm.vocabulary_fingerprint = vocab.fingerprint();
    return tdm;
}

} // namespace

Tdm build_pseudo_tdm(const Corpus& corpus, KPrime kprime, const WeightingHooks& hooks, const MsmOptions& options) {
    return assemble(corpus, kprime, TdmKind::pseudo, hooks, options);
}

Tdm build_vsm_tdm(const Corpus& corpus, const WeightingHooks& hooks) {
    return assemble(corpus, KPrime::full_rank(), TdmKind::vsm, hooks, MsmOptions{});
}

SparseMatrix collection_tsm(const Corpus& corpus) {
    std::vector<SparseVector> columns;
    for (const auto& d : corpus.documents) {
        const Tsm tsm = build_tsm(d, corpus.vocabulary);
        for (Index j = 0; j < tsm.matrix.cols(); ++j) columns.push_back(tsm.matrix.column(j));
    }
    return SparseMatrix::from_columns(static_cast<Index>(corpus.vocabulary.size()), columns);
}

} // namespace msmir
