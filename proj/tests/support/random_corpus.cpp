#include "random_corpus.hpp"

#include <string>

#include <Eigen/QR>

namespace msmir::testing {

std::vector<RawDocument> random_documents(std::mt19937_64& rng, const RandomCorpusSpec& spec) {
    std::uniform_int_distribution<std::size_t> docs(spec.min_docs, spec.max_docs);
    std::uniform_int_distribution<std::size_t> vocab(2, spec.max_vocabulary);
    std::uniform_int_distribution<std::size_t> sentences(spec.min_sentences, spec.max_sentences);
    std::uniform_int_distribution<std::size_t> length(1, spec.max_sentence_length);
    const std::size_t v = vocab(rng);
    std::uniform_int_distribution<std::size_t> word(0, v - 1);

    std::vector<RawDocument> out(docs(rng));
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d].id = "d" + std::to_string(d);
        const std::size_t s = sentences(rng);
        for (std::size_t i = 0; i < s; ++i) {
            const std::size_t len = length(rng);
            for (std::size_t t = 0; t < len; ++t) out[d].text += "w" + std::to_string(word(rng)) + " ";
            out[d].text += ". ";
        }
    }
    return out;
}

DenseMatrix random_dense(std::mt19937_64& rng, Index rows, Index cols) {
    std::normal_distribution<double> normal;
    DenseMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
    return m;
}

SparseMatrix random_sparse(std::mt19937_64& rng, Index rows, Index cols, double density) {
    std::bernoulli_distribution keep(density);
    std::uniform_real_distribution<double> value(0.0, 1.0);
    std::vector<Triplet> t;
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            if (keep(rng)) t.push_back({i, j, 1.0 - value(rng)});
    return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

DenseMatrix random_rank(std::mt19937_64& rng, Index rows, Index cols, Index rank) {
    return random_dense(rng, rows, rank) * random_dense(rng, rank, cols);
}

DenseMatrix random_orthogonal(std::mt19937_64& rng, Index n) {
    Eigen::HouseholderQR<DenseMatrix> qr(random_dense(rng, n, n));
    return qr.householderQ() * DenseMatrix::Identity(n, n);
}

} // namespace msmir::testing
