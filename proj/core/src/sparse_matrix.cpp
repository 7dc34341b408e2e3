#include "msmir/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace msmir {

double SparseVector::norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
}

DenseVector SparseVector::to_dense(Index size) const {
    DenseVector out = DenseVector::Zero(size);
    for (std::size_t i = 0; i < indices.size(); ++i) out(indices[i]) = values[i];
    return out;
}

SparseMatrix::SparseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), col_ptr_(static_cast<std::size_t>(cols) + 1, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> triplets) {
    SparseMatrix m(rows, cols);
    for (const auto& t : triplets)
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::out_of_range("triplet outside matrix bounds");
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    std::size_t i = 0;
    for (Index j = 0; j < cols; ++j) {
        while (i < triplets.size() && triplets[i].col == j) {
            const Index r = triplets[i].row;
            double sum = 0.0;
            while (i < triplets.size() && triplets[i].col == j && triplets[i].row == r) sum += triplets[i++].value;
            if (sum != 0.0) {
                m.row_idx_.push_back(r);
                m.values_.push_back(sum);
            }
        }
        m.col_ptr_[static_cast<std::size_t>(j) + 1] = static_cast<Index>(m.values_.size());
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& dense, double drop_tolerance) {
    SparseMatrix m(dense.rows(), dense.cols());
    for (Index j = 0; j < dense.cols(); ++j) {
        for (Index i = 0; i < dense.rows(); ++i) {
            const double v = dense(i, j);
            if (v != 0.0 && std::abs(v) > drop_tolerance) {
                m.row_idx_.push_back(i);
                m.values_.push_back(v);
            }
        }
        m.col_ptr_[static_cast<std::size_t>(j) + 1] = static_cast<Index>(m.values_.size());
    }
    return m;
}

SparseMatrix SparseMatrix::from_columns(Index rows, std::span<const SparseVector> columns) {
    SparseMatrix m(rows, static_cast<Index>(columns.size()));
    std::size_t total = 0;
    for (const auto& c : columns) total += c.nnz();
    m.row_idx_.reserve(total);
    m.values_.reserve(total);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const auto& c = columns[j];
        if (c.indices.size() != c.values.size()) throw std::invalid_argument("sparse vector size mismatch");
        m.row_idx_.insert(m.row_idx_.end(), c.indices.begin(), c.indices.end());
        m.values_.insert(m.values_.end(), c.values.begin(), c.values.end());
        m.col_ptr_[j + 1] = static_cast<Index>(m.values_.size());
    }
    m.validate();
    return m;
}

SparseMatrix SparseMatrix::from_csc(Index rows, Index cols, std::vector<Index> col_ptr,
                                    std::vector<Index> row_idx, std::vector<double> values) {
    SparseMatrix m(rows, cols);
    m.col_ptr_ = std::move(col_ptr);
    m.row_idx_ = std::move(row_idx);
    m.values_ = std::move(values);
    m.validate();
    return m;
}

void SparseMatrix::validate() const {
    if (col_ptr_.size() != static_cast<std::size_t>(cols_) + 1 || col_ptr_.front() != 0 ||
        col_ptr_.back() != static_cast<Index>(values_.size()) || row_idx_.size() != values_.size())
        throw std::invalid_argument("inconsistent CSC arrays");
    for (Index j = 0; j < cols_; ++j) {
        const Index b = col_ptr_[j], e = col_ptr_[j + 1];
        if (b > e) throw std::invalid_argument("column pointers must be nondecreasing");
        for (Index p = b; p < e; ++p) {
            const Index r = row_idx_[p];
            if (r < 0 || r >= rows_) throw std::invalid_argument("row index out of range in column " + std::to_string(j));
            if (p > b && row_idx_[p - 1] >= r)
                throw std::invalid_argument("row indices not strictly increasing in column " + std::to_string(j));
            if (values_[p] == 0.0) throw std::invalid_argument("explicit zero in column " + std::to_string(j));
        }
    }
}

std::span<const Index> SparseMatrix::column_rows(Index j) const {
    return {row_idx_.data() + col_ptr_[j], static_cast<std::size_t>(col_ptr_[j + 1] - col_ptr_[j])};
}

std::span<const double> SparseMatrix::column_values(Index j) const {
    return {values_.data() + col_ptr_[j], static_cast<std::size_t>(col_ptr_[j + 1] - col_ptr_[j])};
}

SparseVector SparseMatrix::column(Index j) const {
    auto r = column_rows(j);
    auto v = column_values(j);
    return SparseVector{{r.begin(), r.end()}, {v.begin(), v.end()}};
}

DenseVector SparseMatrix::multiply(const DenseVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
    DenseVector y = DenseVector::Zero(rows_);
    for (Index j = 0; j < cols_; ++j) {
        const double xj = x(j);
        if (xj == 0.0) continue;
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) y(row_idx_[p]) += values_[p] * xj;
    }
    return y;
}

DenseVector SparseMatrix::multiply_transpose(const DenseVector& x) const {
    if (x.size() != rows_) throw std::invalid_argument("multiply_transpose: dimension mismatch");
    DenseVector y(cols_);
    for (Index j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) s += values_[p] * x(row_idx_[p]);
        y(j) = s;
    }
    return y;
}

DenseMatrix SparseMatrix::multiply(const DenseMatrix& x) const {
    if (x.rows() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
    DenseMatrix y = DenseMatrix::Zero(rows_, x.cols());
    for (Index j = 0; j < cols_; ++j)
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) y.row(row_idx_[p]) += values_[p] * x.row(j);
    return y;
}

DenseMatrix SparseMatrix::multiply_transpose(const DenseMatrix& x) const {
    if (x.rows() != rows_) throw std::invalid_argument("multiply_transpose: dimension mismatch");
    DenseMatrix y = DenseMatrix::Zero(cols_, x.cols());
    for (Index j = 0; j < cols_; ++j)
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) y.row(j) += values_[p] * x.row(row_idx_[p]);
    return y;
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix d = DenseMatrix::Zero(rows_, cols_);
    for (Index j = 0; j < cols_; ++j)
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) d(row_idx_[p], j) = values_[p];
    return d;
}

double SparseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

std::vector<double> SparseMatrix::column_norms() const {
    std::vector<double> norms(static_cast<std::size_t>(cols_));
    for (Index j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) s += values_[p] * values_[p];
        norms[static_cast<std::size_t>(j)] = std::sqrt(s);
    }
    return norms;
}

SparseMatrix SparseMatrix::column_block(Index first, Index count) const {
    if (first < 0 || count < 0 || first + count > cols_) throw std::out_of_range("column block outside matrix");
    SparseMatrix m(rows_, count);
    const Index b = col_ptr_[first], e = col_ptr_[first + count];
    m.row_idx_.assign(row_idx_.begin() + b, row_idx_.begin() + e);
    m.values_.assign(values_.begin() + b, values_.begin() + e);
    for (Index j = 0; j <= count; ++j) m.col_ptr_[j] = col_ptr_[first + j] - b;
    return m;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row count mismatch");
    SparseMatrix m(a.rows_, a.cols_ + b.cols_);
    m.row_idx_ = a.row_idx_;
    m.row_idx_.insert(m.row_idx_.end(), b.row_idx_.begin(), b.row_idx_.end());
    m.values_ = a.values_;
    m.values_.insert(m.values_.end(), b.values_.begin(), b.values_.end());
    std::copy(a.col_ptr_.begin(), a.col_ptr_.end(), m.col_ptr_.begin());
    const Index offset = static_cast<Index>(a.values_.size());
    for (Index j = 1; j <= b.cols_; ++j) m.col_ptr_[a.cols_ + j] = b.col_ptr_[j] + offset;
    return m;
}

} // namespace msmir
