#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace msmir {

using Index = Eigen::Index;
using DenseMatrix = Eigen::MatrixXd;
using DenseVector = Eigen::VectorXd;

/// Sparse vector with strictly increasing indices and no stored zeros.
struct SparseVector {
    std::vector<Index> indices;
    std::vector<double> values;

    std::size_t nnz() const noexcept { return indices.size(); }
    double norm() const;
    DenseVector to_dense(Index size) const;
};

struct Triplet {
    Index row;
    Index col;
    double value;
};

/// Column-compressed sparse matrix. Row indices are sorted and unique within
/// each column and explicit zeros are never stored.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols);

    /// Sums duplicates and drops entries that end up exactly zero.
    static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> triplets);
    /// Entries with |value| <= drop_tolerance are not stored.
    static SparseMatrix from_dense(const DenseMatrix& dense, double drop_tolerance = 0.0);
    /// Assemble from per-column sparse vectors (each already sorted, zero-free).
    static SparseMatrix from_columns(Index rows, std::span<const SparseVector> columns);
    /// Raw CSC arrays; validated.
    static SparseMatrix from_csc(Index rows, Index cols, std::vector<Index> col_ptr,
                                 std::vector<Index> row_idx, std::vector<double> values);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return values_.size(); }

    const std::vector<Index>& col_ptr() const noexcept { return col_ptr_; }
    const std::vector<Index>& row_indices() const noexcept { return row_idx_; }
    const std::vector<double>& values() const noexcept { return values_; }

    std::span<const Index> column_rows(Index j) const;
    std::span<const double> column_values(Index j) const;
    SparseVector column(Index j) const;

    /// y = A x
    DenseVector multiply(const DenseVector& x) const;
    /// y = A^T x
    DenseVector multiply_transpose(const DenseVector& x) const;
    /// Y = A X
    DenseMatrix multiply(const DenseMatrix& x) const;
    /// Y = A^T X
    DenseMatrix multiply_transpose(const DenseMatrix& x) const;

    DenseMatrix to_dense() const;
    double frobenius_norm() const;
    std::vector<double> column_norms() const;

    /// Columns [first, first + count).
    SparseMatrix column_block(Index first, Index count) const;
    /// Horizontal concatenation [a, b]; row counts must agree.
    static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    void validate() const;

    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Index> col_ptr_{0};
    std::vector<Index> row_idx_;
    std::vector<double> values_;
};

} // namespace msmir
