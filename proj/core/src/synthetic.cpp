#include "msmir/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace msmir {

namespace {

// Alphabetic pseudo-word for a term index: base-100 digits as CV syllables.
std::string pseudo_word(std::size_t index) {
    static constexpr const char* consonants = "bcdfghjklmnprstvwxyz";
    static constexpr const char* vowels = "aeiou";
    std::string word;
    std::size_t v = index;
    do {
        const std::size_t syllable = v % 100;
        word += consonants[syllable / 5];
        word += vowels[syllable % 5];
        v /= 100;
    } while (v > 0);
    if (word.size() < 4) word += "qa";
    return word;
}

std::discrete_distribution<std::size_t> zipf(std::size_t n, double exponent) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = 1.0 / std::pow(static_cast<double>(i + 1), exponent);
    return {w.begin(), w.end()};
}

} // namespace

SyntheticCollection generate_collection(const SyntheticSpec& spec) {
    if (spec.documents == 0 || spec.topics == 0 || spec.vocabulary == 0 || spec.terms_per_topic == 0)
        throw std::invalid_argument("generate_collection: sizes must be positive");
    if (spec.min_sentences < 1 || spec.min_sentences > spec.max_sentences || spec.min_sentence_length < 1 ||
        spec.min_sentence_length > spec.max_sentence_length)
        throw std::invalid_argument("generate_collection: invalid sentence ranges");

    std::mt19937_64 rng(spec.seed);
    std::vector<std::string> words(spec.vocabulary);
    for (std::size_t i = 0; i < spec.vocabulary; ++i) words[i] = pseudo_word(i);

    // Each topic is a random subset of the vocabulary with Zipfian weights.
    const std::size_t per_topic = std::min(spec.terms_per_topic, spec.vocabulary);
    std::vector<std::vector<std::size_t>> topic_terms(spec.topics);
    std::vector<std::size_t> all(spec.vocabulary);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (auto& terms : topic_terms) {
        std::shuffle(all.begin(), all.end(), rng);
        terms.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(per_topic));
    }
    auto topic_rank = zipf(per_topic, 0.8);
    auto background = zipf(spec.vocabulary, 1.0);
    std::bernoulli_distribution from_topic(spec.topic_weight);
    std::uniform_int_distribution<std::size_t> sentence_count(spec.min_sentences, spec.max_sentences);
    std::uniform_int_distribution<std::size_t> sentence_length(spec.min_sentence_length, spec.max_sentence_length);
    std::uniform_int_distribution<std::size_t> pick_topic(0, spec.topics - 1);

    auto draw = [&](std::size_t topic) -> const std::string& {
        if (from_topic(rng)) return words[topic_terms[topic][topic_rank(rng)]];
        return words[background(rng)];
    };

    SyntheticCollection out;
    out.documents.reserve(spec.documents);
    for (std::size_t d = 0; d < spec.documents; ++d) {
        const std::size_t topic = pick_topic(rng);
        out.topic_of.push_back(topic);
        std::string text;
        const std::size_t sentences = sentence_count(rng);
        for (std::size_t s = 0; s < sentences; ++s) {
            const std::size_t len = sentence_length(rng);
            for (std::size_t t = 0; t < len; ++t) {
                if (t > 0) text += ' ';
                text += draw(topic);
            }
            text += s + 1 < sentences ? ". " : ".";
        }
        out.documents.push_back(RawDocument{std::to_string(d + 1), std::move(text)});
    }

    for (std::size_t q = 0; q < spec.queries; ++q) {
        const std::size_t topic = q % spec.topics;
        std::string text;
        for (std::size_t t = 0; t < spec.query_length; ++t) {
            if (t > 0) text += ' ';
            text += words[topic_terms[topic][topic_rank(rng)]];
        }
        const std::string qid = std::to_string(q + 1);
        out.queries.push_back(RawDocument{qid, std::move(text)});
        auto& rel = out.qrels.relevant[qid];
        for (std::size_t d = 0; d < spec.documents; ++d)
            if (out.topic_of[d] == topic) rel.insert(out.documents[d].id);
    }
    return out;
}

} // namespace msmir
