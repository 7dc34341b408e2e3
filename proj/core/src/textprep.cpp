#include "msmir/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <unordered_set>

#include "msmir/parallel.hpp"

namespace msmir {

namespace {

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

bool is_term_char(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::uint64_t fnv1a(const std::vector<std::string>& terms) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 1099511628211ULL;
    };
    for (const auto& t : terms) {
        for (unsigned char c : t) mix(c);
        mix(0);
    }
    return h;
}

} // namespace

std::uint64_t Sentence::mass() const {
    std::uint64_t total = 0;
    for (const auto& [term, count] : counts) total += count;
    return total;
}

void PrepConfig::validate() const {
    if (min_term_length < 1) throw std::invalid_argument("min_term_length must be >= 1");
    if (min_global_df < 1) throw std::invalid_argument("min_global_df must be >= 1");
}

Vocabulary::Vocabulary(std::vector<std::string> terms, const std::unordered_map<std::string, std::uint32_t>& df)
    : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    if (std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end())
        throw std::invalid_argument("vocabulary terms must be unique");
    df_.reserve(terms_.size());
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        auto it = df.find(terms_[i]);
        const std::uint32_t f = it == df.end() ? 0 : it->second;
        if (f < 1) throw std::invalid_argument("vocabulary term '" + terms_[i] + "' has zero document frequency");
        df_.push_back(f);
        index_.emplace(terms_[i], static_cast<TermId>(i));
    }
    fingerprint_ = fnv1a(terms_);
}

std::optional<TermId> Vocabulary::find(std::string_view term) const {
    auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<TermId, std::uint64_t>> CorpusDocument::term_counts() const {
    std::map<TermId, std::uint64_t> acc;
    for (const auto& s : sentences)
        for (const auto& [term, count] : s.counts) acc[term] += count;
    return {acc.begin(), acc.end()};
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('.', start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view segment = text.substr(start, stop - start);
        if (!is_blank(segment)) {
            auto first = segment.find_first_not_of(" \t\r\n\f\v");
            auto last = segment.find_last_not_of(" \t\r\n\f\v");
            out.emplace_back(segment.substr(first, last - first + 1));
        }
        start = stop + 1;
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view sentence, const PrepConfig& cfg) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < sentence.size()) {
        while (i < sentence.size() && !is_term_char(static_cast<unsigned char>(sentence[i]))) ++i;
        std::size_t j = i;
        while (j < sentence.size() && is_term_char(static_cast<unsigned char>(sentence[j]))) ++j;
        if (j > i) {
            std::string token(sentence.substr(i, j - i));
            if (cfg.lowercase)
                for (auto& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (token.size() >= cfg.min_term_length && !(cfg.stopwords && cfg.stopwords->contains(token)))
                tokens.push_back(std::move(token));
        }
        i = j;
    }
    return tokens;
}

Corpus build_corpus(const std::vector<RawDocument>& docs, const PrepConfig& cfg, unsigned threads) {
    cfg.validate();
    {
        std::unordered_set<std::string_view> seen;
        for (const auto& d : docs) {
            if (d.id.empty()) throw std::invalid_argument("document with empty id");
            if (!seen.insert(d.id).second) throw std::invalid_argument("duplicate document id: " + d.id);
        }
    }

    // Sentence token lists per document.
    std::vector<std::vector<std::vector<std::string>>> tokenized(docs.size());
    parallel_for(docs.size(), threads, [&](std::size_t i) {
        for (const auto& s : split_sentences(docs[i].text)) {
            auto tokens = tokenize(s, cfg);
            if (!tokens.empty()) tokenized[i].push_back(std::move(tokens));
        }
    });

    std::unordered_map<std::string, std::uint32_t> df;
    for (const auto& doc : tokenized) {
        std::unordered_set<std::string_view> distinct;
        for (const auto& s : doc)
            for (const auto& t : s) distinct.insert(t);
        for (auto t : distinct) ++df[std::string(t)];
    }
    std::vector<std::string> retained;
    for (const auto& [term, f] : df)
        if (f >= cfg.min_global_df) retained.push_back(term);

    Corpus corpus;
    corpus.vocabulary = Vocabulary(std::move(retained), df);
    corpus.documents.resize(docs.size());
    const auto& vocab = corpus.vocabulary;
    parallel_for(docs.size(), threads, [&](std::size_t i) {
        auto& out = corpus.documents[i];
        out.id = docs[i].id;
        for (const auto& s : tokenized[i]) {
            std::map<TermId, std::uint32_t> counts;
            for (const auto& t : s)
                if (auto id = vocab.find(t)) ++counts[*id];
            if (counts.empty()) continue;
            out.sentences.push_back(Sentence{{counts.begin(), counts.end()}});
        }
    });
    return corpus;
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    stats.vocabulary_size = corpus.vocabulary.size();
    stats.document_count = corpus.documents.size();
    if (corpus.documents.empty()) return stats;
    double terms = 0.0;
    double sentences = 0.0;
    for (const auto& d : corpus.documents) {
        const auto counts = d.term_counts();
        terms += static_cast<double>(counts.size());
        sentences += static_cast<double>(d.sentences.size());
        for (const auto& [t, c] : counts) stats.total_mass += c;
    }
    const double n = static_cast<double>(corpus.documents.size());
    stats.avg_terms_per_doc = terms / n;
    stats.avg_sentences_per_doc = sentences / n;
    if (stats.vocabulary_size > 0)
        stats.terms_percent = 100.0 * stats.avg_terms_per_doc / static_cast<double>(stats.vocabulary_size);
    stats.sentences_percent = 100.0 * stats.avg_sentences_per_doc / n;
    return stats;
}

std::unordered_set<std::string> read_stopwords(std::istream& in) {
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        words.insert(line.substr(first, last - first + 1));
    }
    return words;
}

std::unordered_set<std::string> read_stopwords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    return read_stopwords(in);
}

} // namespace msmir
