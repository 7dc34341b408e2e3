#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "msmir/sparse_matrix.hpp"

namespace msmir {

/// Singular triplets with orthonormal factor columns and nonincreasing sigma.
///
/// Every factorization produced here is sign-canonical: each left vector u_i is
/// flipped so that its largest-magnitude entry is positive (first such entry on
/// ties) and v_i is flipped along with it.
struct SvdResult {
    DenseMatrix U;      // m x k
    DenseVector sigma;  // k
    DenseMatrix V;      // n x k
    /// Per-triplet residual max(|A v - s u|, |A^T u - s v|); empty for dense SVDs.
    std::vector<double> residuals;

    Index rank() const noexcept { return sigma.size(); }
};

/// Full thin SVD (min(m, n) triplets). Throws std::invalid_argument on
/// non-finite input.
SvdResult svd_dense(const DenseMatrix& m);

/// Options for the partial solver.
struct SvdsOptions {
    /// Relative tolerance: residuals must fall below tol * sigma_1.
    double tol = 1e-10;
    /// Largest Krylov subspace dimension to build; 0 means min(m, n).
    Index max_iter = 0;
    std::uint64_t seed = 0x5eed;
};

/// Top-k singular triplets by Golub-Kahan-Lanczos bidiagonalization with full
/// reorthogonalization. The Krylov subspace is extended until every requested
/// triplet's residual is below tol * sigma_1, otherwise ConvergenceError.
/// Requires 1 <= k <= min(m, n).
SvdResult svds_sparse(const SparseMatrix& a, Index k, const SvdsOptions& options = {});

/// sum_{i<k} sigma_i u_i v_i^T. Requires 1 <= k <= svd.rank().
DenseMatrix best_k(const SvdResult& svd, Index k);

/// Count of sigma_i above sigma_1 * max(relative_tol, max(m, n) * eps).
Index numerical_rank(const DenseVector& sigma, Index rows, Index cols, double relative_tol = 1e-10);

/// |A - best_k(A)|_F / |A|_F from the top-k partial SVD only. Zero matrix gives
/// 0; k >= min(m, n) gives 0 without any factorization.
double lowrank_shift_distance(const SparseMatrix& a, Index k, const SvdsOptions& options = {});

/// u.v / (|u| |v|), or 0 when either norm is zero.
double cosine(std::span<const double> u, std::span<const double> v);
double cosine(const DenseVector& u, const DenseVector& v);

/// Flip signs per the canonical convention documented on SvdResult.
void canonicalize_signs(SvdResult& svd);

/// "index,sigma" CSV, 1-based index, 17 significant digits.
void write_sigma_csv(std::ostream& out, std::span<const double> sigma);

} // namespace msmir
