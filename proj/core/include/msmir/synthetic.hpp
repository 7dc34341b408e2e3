#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msmir/smart_format.hpp"
#include "msmir/textprep.hpp"

namespace msmir {

/// Topic-mixture generator for desk-scale experiments. Every document draws
/// its sentences from one topic's term distribution blended with a shared
/// Zipfian background, which gives short single-topic abstracts.
struct SyntheticSpec {
    std::size_t documents = 1000;
    std::size_t topics = 30;
    std::size_t vocabulary = 5000;
    std::size_t terms_per_topic = 120;
    std::size_t min_sentences = 3;
    std::size_t max_sentences = 10;
    std::size_t min_sentence_length = 5;
    std::size_t max_sentence_length = 12;
    /// Probability that a token comes from the document's topic.
    double topic_weight = 0.6;
    std::size_t queries = 30;
    std::size_t query_length = 8;
    std::uint64_t seed = 1;
};

struct SyntheticCollection {
    std::vector<RawDocument> documents;
    std::vector<RawDocument> queries;
    Qrels qrels;
    /// Topic of each document.
    std::vector<std::size_t> topic_of;
};

SyntheticCollection generate_collection(const SyntheticSpec& spec);

} // namespace msmir
