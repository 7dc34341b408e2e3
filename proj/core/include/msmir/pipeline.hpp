#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msmir/msm.hpp"
#include "msmir/retrieval.hpp"
#include "msmir/svd.hpp"
#include "msmir/textprep.hpp"

namespace msmir {

enum class MethodKind { vsm, msm, lsi, msm_lsi };

/// Retrieval method: "vsm", "msm:<k'>", "lsi:<k>", "msm+lsi:<k'>:<k>".
/// k' may be "full" for the full-rank sentinel.
struct Method {
    MethodKind kind = MethodKind::vsm;
    KPrime kprime = KPrime::full_rank();
    Index lsi_k = 0;

    std::string name() const;
    bool uses_pseudo_tdm() const noexcept { return kind == MethodKind::msm || kind == MethodKind::msm_lsi; }
    bool uses_lsi() const noexcept { return kind == MethodKind::lsi || kind == MethodKind::msm_lsi; }
};

/// Throws std::invalid_argument on a malformed or non-positive spec.
Method parse_method(const std::string& spec);

struct PipelineOptions {
    MsmOptions msm;
    SvdsOptions svds;
    LsiQueryProjection projection = LsiQueryProjection::project;
};

/// Scoring structure for one method.
class RetrievalIndex {
public:
    static RetrievalIndex build(const Corpus& corpus, const Method& method, const PipelineOptions& options = {});
    /// Wrap an already built tdm; builds the LSI projection when the method asks for it.
    static RetrievalIndex from_tdm(Tdm tdm, const Method& method, const PipelineOptions& options = {});

    RankedList score(const Query& q) const;
    std::vector<RankedList> score_all(const std::vector<Query>& queries, unsigned threads = 1) const;

    const Method& method() const noexcept { return method_; }
    const Tdm& tdm() const noexcept { return tdm_; }
    const std::optional<LsiIndex>& lsi() const noexcept { return lsi_; }

private:
    Method method_;
    Tdm tdm_;
    std::optional<LsiIndex> lsi_;
};

std::vector<Query> make_queries(const std::vector<RawDocument>& raw, const Vocabulary& vocab, const PrepConfig& cfg);

struct MethodTiming {
    std::string method;
    double build_seconds = 0.0;
    double query_seconds = 0.0;
    double total_seconds() const noexcept { return build_seconds + query_seconds; }
};

/// Wall-clock time of each method end to end: corpus preprocessing, index
/// build (including every SVD) and scoring of all queries.
std::vector<MethodTiming> timing_report(const std::vector<RawDocument>& documents,
                                        const std::vector<RawDocument>& queries,
                                        const std::vector<Method>& methods,
                                        const PrepConfig& prep, const PipelineOptions& options = {});

/// Top-n singular values of a tdm via the partial solver (n clamped to min(m, n)).
std::vector<double> spectrum_report(const Tdm& tdm, Index n, const SvdsOptions& options = {});

} // namespace msmir
