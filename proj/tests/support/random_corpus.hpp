#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "msmir/sparse_matrix.hpp"
#include "msmir/textprep.hpp"

namespace msmir::testing {

struct RandomCorpusSpec {
    std::size_t min_docs = 5;
    std::size_t max_docs = 50;
    std::size_t min_sentences = 2;
    std::size_t max_sentences = 20;
    std::size_t max_vocabulary = 200;
    std::size_t max_sentence_length = 10;
};

/// Documents over words "w0".."w{V-1}" with a random V <= max_vocabulary.
std::vector<RawDocument> random_documents(std::mt19937_64& rng, const RandomCorpusSpec& spec = {});

DenseMatrix random_dense(std::mt19937_64& rng, Index rows, Index cols);

/// Each entry nonzero with probability `density`, values uniform in (0, 1].
SparseMatrix random_sparse(std::mt19937_64& rng, Index rows, Index cols, double density);

/// Random m x n matrix of exact rank r (r <= min(m, n)).
DenseMatrix random_rank(std::mt19937_64& rng, Index rows, Index cols, Index rank);

/// n x n orthogonal matrix from the QR factorization of a Gaussian matrix.
DenseMatrix random_orthogonal(std::mt19937_64& rng, Index n);

} // namespace msmir::testing
