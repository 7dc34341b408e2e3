#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace msmir {

using TermId = std::uint32_t;

struct RawDocument {
    std::string id;
    std::string text;

    friend bool operator==(const RawDocument&, const RawDocument&) = default;
};

/// Term-count bag of one sentence, sorted by term id, every count >= 1.
struct Sentence {
    std::vector<std::pair<TermId, std::uint32_t>> counts;

    std::uint64_t mass() const;
};

/// Tokenization and vocabulary-pruning settings.
struct PrepConfig {
    std::size_t min_term_length = 2;
    std::optional<std::unordered_set<std::string>> stopwords;
    bool lowercase = true;
    std::size_t min_global_df = 1;

    /// Throws std::invalid_argument when a bound is below 1.
    void validate() const;
};

/// Dense term <-> index bijection with per-term document frequency.
/// Indices follow lexicographic term order, so equal term sets give equal
/// vocabularies regardless of document order.
class Vocabulary {
public:
    Vocabulary() = default;

    /// `terms` must be unique; they are sorted before indexing.
    Vocabulary(std::vector<std::string> terms, const std::unordered_map<std::string, std::uint32_t>& df);

    std::size_t size() const noexcept { return terms_.size(); }
    std::optional<TermId> find(std::string_view term) const;
    const std::string& term(TermId id) const { return terms_.at(id); }
    std::uint32_t df(TermId id) const { return df_.at(id); }
    const std::vector<std::string>& terms() const noexcept { return terms_; }
    const std::vector<std::uint32_t>& document_frequencies() const noexcept { return df_; }

    /// FNV-1a hash over the ordered term list; used to detect index/query mismatch.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
        return a.terms_ == b.terms_ && a.df_ == b.df_;
    }

private:
    std::vector<std::string> terms_;
    std::vector<std::uint32_t> df_;
    std::unordered_map<std::string, TermId> index_;
    std::uint64_t fingerprint_ = 0;
};

struct CorpusDocument {
    std::string id;
    std::vector<Sentence> sentences;

    /// Whole-document term counts (sum of the sentence bags), sorted by term id.
    std::vector<std::pair<TermId, std::uint64_t>> term_counts() const;
};

/// Documents in stable input order over a shared vocabulary. The order
/// defines the column order of every term-by-document matrix built from it.
struct Corpus {
    Vocabulary vocabulary;
    std::vector<CorpusDocument> documents;
};

/// Table-style size summary of a corpus.
struct CorpusStats {
    std::size_t vocabulary_size = 0;
    std::size_t document_count = 0;
    double avg_terms_per_doc = 0.0;      // distinct terms
    double avg_sentences_per_doc = 0.0;
    double terms_percent = 0.0;          // of the vocabulary
    double sentences_percent = 0.0;      // of the document count
    std::uint64_t total_mass = 0;
};

/// Period-delimited sentence split. Blank segments are dropped; text after the
/// last period is a sentence of its own.
std::vector<std::string> split_sentences(std::string_view text);

/// Maximal ASCII alphanumeric runs, optionally lowercased, filtered by length
/// and stopword set.
std::vector<std::string> tokenize(std::string_view sentence, const PrepConfig& cfg);

/// Throws std::invalid_argument naming the first duplicated id.
Corpus build_corpus(const std::vector<RawDocument>& docs, const PrepConfig& cfg, unsigned threads = 1);

CorpusStats corpus_stats(const Corpus& corpus);

/// One term per line; blank lines and text after '#' are ignored.
std::unordered_set<std::string> read_stopwords(std::istream& in);
std::unordered_set<std::string> read_stopwords_file(const std::string& path);

} // namespace msmir
