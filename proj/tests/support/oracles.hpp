#pragma once

// Independent reference computations for tests. Nothing here calls into the
// msmir linear algebra or metric code it is used to check.

#include <set>
#include <string>
#include <vector>

#include "msmir/retrieval.hpp"
#include "msmir/sparse_matrix.hpp"
#include "msmir/textprep.hpp"

namespace msmir::testing {

using RowMajor = std::vector<std::vector<double>>;

RowMajor to_rows(const DenseMatrix& m);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
std::vector<double> jacobi_eigenvalues(RowMajor sym, double tol = 1e-15, int max_sweeps = 100);

/// Singular values as square roots of the eigenvalues of M^T M (or M M^T,
/// whichever is smaller), descending, min(m, n) of them.
std::vector<double> gram_singular_values(const DenseMatrix& m);

/// Precision recomputed at every cutoff, no shortcuts.
double brute_force_average_precision(const std::vector<std::string>& ranking, const std::set<std::string>& relevant);
std::vector<double> brute_force_11pt(const std::vector<std::string>& ranking, const std::set<std::string>& relevant);

/// Tokenizer reference built on std::regex.
std::vector<std::string> regex_tokenize(const std::string& text, std::size_t min_len, bool lowercase);

/// Line-by-line SMART reader written independently of the library parser.
std::vector<RawDocument> reference_parse_smart(const std::string& content);

/// Plain dense cosine.
double dense_cosine(const std::vector<double>& a, const std::vector<double>& b);

std::vector<std::string> doc_ids_of(const RankedList& list);

} // namespace msmir::testing
