#include "msmir/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>

#include "msmir/parallel.hpp"

namespace msmir {

namespace {

std::size_t parse_positive(const std::string& text, const std::string& spec) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw std::invalid_argument("bad method '" + spec + "': '" + text + "' is not a positive integer");
    return value;
}

KPrime parse_kprime(const std::string& text, const std::string& spec) {
    if (text == "full" || text == "inf") return KPrime::full_rank();
    return KPrime(parse_positive(text, spec));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::string Method::name() const {
    switch (kind) {
    case MethodKind::vsm: return "vsm";
    case MethodKind::msm: return "msm:" + kprime.to_string();
    case MethodKind::lsi: return "lsi:" + std::to_string(lsi_k);
    case MethodKind::msm_lsi: return "msm+lsi:" + kprime.to_string() + ":" + std::to_string(lsi_k);
    }
    return "?";
}

Method parse_method(const std::string& spec) {
    const auto parts = split(spec, ':');
    Method m;
    if (parts[0] == "vsm" && parts.size() == 1) {
        m.kind = MethodKind::vsm;
    } else if (parts[0] == "msm" && parts.size() == 2) {
        m.kind = MethodKind::msm;
        m.kprime = parse_kprime(parts[1], spec);
    } else if (parts[0] == "lsi" && parts.size() == 2) {
        m.kind = MethodKind::lsi;
        m.lsi_k = static_cast<Index>(parse_positive(parts[1], spec));
    } else if (parts[0] == "msm+lsi" && parts.size() == 3) {
        m.kind = MethodKind::msm_lsi;
        m.kprime = parse_kprime(parts[1], spec);
        m.lsi_k = static_cast<Index>(parse_positive(parts[2], spec));
    } else {
        throw std::invalid_argument("bad method '" + spec + "' (expected vsm, msm:<k'>, lsi:<k>, msm+lsi:<k'>:<k>)");
    }
    return m;
}

RetrievalIndex RetrievalIndex::build(const Corpus& corpus, const Method& method, const PipelineOptions& options) {
    Tdm tdm = method.uses_pseudo_tdm() ? build_pseudo_tdm(corpus, method.kprime, {}, options.msm)
                                       : build_vsm_tdm(corpus);
    return from_tdm(std::move(tdm), method, options);
}

RetrievalIndex RetrievalIndex::from_tdm(Tdm tdm, const Method& method, const PipelineOptions& options) {
    RetrievalIndex index;
    index.method_ = method;
    if (method.uses_lsi()) index.lsi_ = build_lsi_index(tdm, method.lsi_k, options.svds, options.projection);
    index.tdm_ = std::move(tdm);
    return index;
}

RankedList RetrievalIndex::score(const Query& q) const {
    return lsi_ ? score_lsi(*lsi_, q) : score_cosine(tdm_, q);
}

std::vector<RankedList> RetrievalIndex::score_all(const std::vector<Query>& queries, unsigned threads) const {
    std::vector<RankedList> out(queries.size());
    parallel_for(queries.size(), threads, [&](std::size_t i) { out[i] = score(queries[i]); });
    return out;
}

std::vector<Query> make_queries(const std::vector<RawDocument>& raw, const Vocabulary& vocab, const PrepConfig& cfg) {
    std::vector<Query> out;
    out.reserve(raw.size());
    for (const auto& r : raw) out.push_back(make_query(r.id, r.text, vocab, cfg));
    return out;
}

std::vector<MethodTiming> timing_report(const std::vector<RawDocument>& documents,
                                        const std::vector<RawDocument>& queries,
                                        const std::vector<Method>& methods, const PrepConfig& prep,
                                        const PipelineOptions& options) {
    std::vector<MethodTiming> out;
    for (const auto& method : methods) {
        MethodTiming t;
        t.method = method.name();
        const auto start = std::chrono::steady_clock::now();
        const Corpus corpus = build_corpus(documents, prep, options.msm.threads);
        const auto index = RetrievalIndex::build(corpus, method, options);
        t.build_seconds = seconds_since(start);
        if (!queries.empty()) {
            const auto qstart = std::chrono::steady_clock::now();
            const auto vectors = make_queries(queries, corpus.vocabulary, prep);
            const auto runs = index.score_all(vectors, options.msm.threads);
            t.query_seconds = seconds_since(qstart);
            if (runs.size() != vectors.size()) throw std::logic_error("timing_report: lost queries");
        }
        out.push_back(t);
    }
    return out;
}

std::vector<double> spectrum_report(const Tdm& tdm, Index n, const SvdsOptions& options) {
    const Index k = std::min(n, std::min(tdm.matrix.rows(), tdm.matrix.cols()));
    if (k <= 0) return {};
    const SvdResult svd = svds_sparse(tdm.matrix, k, options);
    return {svd.sigma.data(), svd.sigma.data() + svd.sigma.size()};
}

} // namespace msmir
