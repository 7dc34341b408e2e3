#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msmir/sparse_matrix.hpp"
#include "msmir/textprep.hpp"

namespace msmir {

/// Number of sentence-space singular triplets kept per document.
/// KPrime::full_rank() keeps every triplet, which reproduces the plain tdm.
class KPrime {
public:
    explicit KPrime(std::size_t k);
    static KPrime full_rank() noexcept { return KPrime(); }

    bool is_full_rank() const noexcept { return value_ == kFull; }
    std::size_t value() const noexcept { return value_; }
    /// min(k', limit); limit when full rank.
    std::size_t clamp(std::size_t limit) const noexcept { return value_ < limit ? value_ : limit; }

    std::string to_string() const;
    friend bool operator==(KPrime, KPrime) = default;

private:
    KPrime() = default;
    static constexpr std::size_t kFull = std::numeric_limits<std::size_t>::max();
    std::size_t value_ = kFull;
};

/// Term-by-sentence matrix of one document. Rows span the whole collection
/// vocabulary; columns are the document's sentences in order.
struct Tsm {
    std::string doc_id;
    SparseMatrix matrix;

    std::size_t sentence_count() const noexcept { return static_cast<std::size_t>(matrix.cols()); }
};

/// Optional diagonal term weights (G) and per-sentence weights (p) applied as
/// a = G * H * p. Absent weights default to the identity / all-ones vector.
struct WeightingHooks {
    /// One positive weight per vocabulary term.
    std::optional<std::vector<double>> global;
    /// local->at(doc)[sentence], positive.
    std::optional<std::vector<std::vector<double>>> local;

    /// Throws std::invalid_argument on size mismatch or a non-positive weight.
    void validate(const Corpus& corpus) const;
    bool empty() const noexcept { return !global && !local; }
};

enum class TdmKind : std::uint8_t { vsm = 0, pseudo = 1 };

/// Term-by-document matrix with cached column 2-norms.
struct Tdm {
    SparseMatrix matrix;
    std::vector<std::string> doc_ids;
    TdmKind kind = TdmKind::vsm;
    KPrime kprime = KPrime::full_rank();
    std::vector<double> column_norms;
    std::uint64_t vocabulary_fingerprint = 0;

    std::string describe() const;
};

struct MsmOptions {
    /// Relative singular-value threshold for the per-document rank clamp.
    double rank_tol = 1e-10;
    unsigned threads = 1;
};

Tsm build_tsm(const CorpusDocument& doc, const Vocabulary& vocab);

/// G * best_{k_eff}(S) * p with k_eff = min(k', numerical rank of S). When
/// k_eff equals the rank the exact row sum S * p is returned without an SVD.
/// `global` may be empty (identity); `local` may be empty (all ones).
SparseVector approx_doc_vector(const Tsm& tsm, KPrime kprime,
                               std::span<const double> global = {},
                               std::span<const double> local = {},
                               double rank_tol = 1e-10);

Tdm build_pseudo_tdm(const Corpus& corpus, KPrime kprime, const WeightingHooks& hooks = {},
                     const MsmOptions& options = {});
Tdm build_vsm_tdm(const Corpus& corpus, const WeightingHooks& hooks = {});

/// Term-by-sentence matrix of the whole collection, [S_1, ..., S_n].
SparseMatrix collection_tsm(const Corpus& corpus);

} // namespace msmir
