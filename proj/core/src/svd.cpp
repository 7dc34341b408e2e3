#include "msmir/svd.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "msmir/error.hpp"

namespace msmir {

void canonicalize_signs(SvdResult& svd) {
    for (Index i = 0; i < svd.U.cols(); ++i) {
        Index best = 0;
        double best_abs = -1.0;
        for (Index r = 0; r < svd.U.rows(); ++r) {
            const double a = std::abs(svd.U(r, i));
            if (a > best_abs) {
                best_abs = a;
                best = r;
            }
        }
        if (best_abs > 0.0 && svd.U(best, i) < 0.0) {
            svd.U.col(i) *= -1.0;
            if (i < svd.V.cols()) svd.V.col(i) *= -1.0;
        }
    }
}

SvdResult svd_dense(const DenseMatrix& m) {
    if (!m.allFinite()) throw std::invalid_argument("svd_dense: matrix has non-finite entries");
    SvdResult out;
    const Index p = std::min(m.rows(), m.cols());
    if (p == 0) {
        out.U = DenseMatrix(m.rows(), 0);
        out.V = DenseMatrix(m.cols(), 0);
        out.sigma = DenseVector(0);
        return out;
    }
    Eigen::BDCSVD<DenseMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.U = svd.matrixU();
    out.sigma = svd.singularValues();
    out.V = svd.matrixV();
    canonicalize_signs(out);
    return out;
}

namespace {

// Two passes of classical Gram-Schmidt against the first `count` columns.
void orthogonalize(const DenseMatrix& basis, Index count, DenseVector& w) {
    if (count == 0) return;
    for (int pass = 0; pass < 2; ++pass) {
        const DenseVector h = basis.leftCols(count).transpose() * w;
        w.noalias() -= basis.leftCols(count) * h;
    }
}

DenseVector random_unit_orthogonal(const DenseMatrix& basis, Index count, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    DenseVector w(basis.rows());
    for (int attempt = 0; attempt < 8; ++attempt) {
        for (Index i = 0; i < w.size(); ++i) w(i) = normal(rng);
        orthogonalize(basis, count, w);
        const double nw = w.norm();
        if (nw > 1e-8) return w / nw;
    }
    throw std::runtime_error("svds_sparse: unable to extend orthonormal basis");
}

void ensure_capacity(DenseMatrix& basis, Index needed, Index limit) {
    if (needed <= basis.cols()) return;
    const Index grown = std::min(limit, std::max(needed, 2 * basis.cols()));
    basis.conservativeResize(Eigen::NoChange, grown);
}

struct RitzCheck {
    SvdResult small;
    std::vector<double> residuals;
    bool converged = false;
};

// SVD of the j x j upper bidiagonal matrix and the Lanczos residual estimate
// |beta_j * x_{j,i}| of each of the leading k Ritz triplets.
RitzCheck check_ritz(const std::vector<double>& alpha, const std::vector<double>& beta, Index j, Index k,
                     double tol) {
    DenseMatrix b = DenseMatrix::Zero(j, j);
    for (Index i = 0; i < j; ++i) {
        b(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < j) b(i, i + 1) = beta[static_cast<std::size_t>(i)];
    }
    RitzCheck c;
    c.small = svd_dense(b);
    const double last_beta = std::abs(beta[static_cast<std::size_t>(j - 1)]);
    const double scale = c.small.sigma.size() > 0 ? c.small.sigma(0) : 0.0;
    c.converged = true;
    for (Index i = 0; i < k; ++i) {
        const double r = last_beta * std::abs(c.small.U(j - 1, i));
        c.residuals.push_back(r);
        if (r > tol * scale) c.converged = false;
    }
    return c;
}

// Lanczos on an operator whose column dimension n does not exceed its row
// dimension m, so that the right Krylov basis fills up first.
SvdResult lanczos_tall(const SparseMatrix& a, bool transposed, Index k, const SvdsOptions& options) {
    const Index m = transposed ? a.cols() : a.rows();
    const Index n = transposed ? a.rows() : a.cols();
    auto apply = [&](const DenseVector& x) { return transposed ? a.multiply_transpose(x) : a.multiply(x); };
    auto apply_t = [&](const DenseVector& x) { return transposed ? a.multiply(x) : a.multiply_transpose(x); };

    const Index limit = options.max_iter > 0 ? std::min(options.max_iter, n) : n;
    if (limit < k) throw std::invalid_argument("svds_sparse: max_iter smaller than k");
    const double breakdown = 1e-13 * a.frobenius_norm();

    std::mt19937_64 rng(options.seed);
    const Index initial = std::min(limit, std::max<Index>(2 * k + 16, 32));
    DenseMatrix left(m, initial);
    DenseMatrix right(n, initial);
    std::vector<double> alpha;
    std::vector<double> beta;

    right.col(0) = random_unit_orthogonal(right, 0, rng);
    Index j = 0;
    Index next_check = std::min(limit, k + std::max<Index>(10, k / 2));
    RitzCheck check;
    while (true) {
        ensure_capacity(left, j + 1, limit);
        DenseVector w = apply(right.col(j));
        if (j > 0) w -= beta.back() * left.col(j - 1);
        orthogonalize(left, j, w);
        double aj = w.norm();
        if (aj <= breakdown) {
            aj = 0.0;
            w = random_unit_orthogonal(left, j, rng);
        } else {
            w /= aj;
        }
        left.col(j) = w;
        alpha.push_back(aj);

        DenseVector z = apply_t(left.col(j)) - aj * right.col(j);
        ++j;
        double bj = 0.0;
        if (j < n) {
            orthogonalize(right, j, z);
            bj = z.norm();
            ensure_capacity(right, j + 1, std::max(limit, j + 1));
            if (bj <= breakdown) {
                bj = 0.0;
                right.col(j) = random_unit_orthogonal(right, j, rng);
            } else {
                right.col(j) = z / bj;
            }
        }
        beta.push_back(bj);

        if (j >= k && (j >= next_check || j == limit)) {
            check = check_ritz(alpha, beta, j, k, options.tol);
            if (check.converged) break;
            if (j == limit) {
                std::ostringstream msg;
                msg << "svds_sparse: " << k << " triplets not converged within a Krylov subspace of dimension "
                    << j << " (tol " << options.tol << ")";
                throw ConvergenceError(msg.str(), check.residuals);
            }
            next_check = std::min(limit, j + std::max<Index>(10, j / 4));
        }
    }

    SvdResult out;
    out.U = left.leftCols(j) * check.small.U.leftCols(k);
    out.V = right.leftCols(j) * check.small.V.leftCols(k);
    out.sigma = check.small.sigma.head(k);
    if (transposed) std::swap(out.U, out.V);
    return out;
}

} // namespace

SvdResult svds_sparse(const SparseMatrix& a, Index k, const SvdsOptions& options) {
    const Index p = std::min(a.rows(), a.cols());
    if (k < 1 || k > p) throw std::invalid_argument("svds_sparse: k must satisfy 1 <= k <= min(m, n)");
    if (!(options.tol > 0.0)) throw std::invalid_argument("svds_sparse: tol must be positive");
    for (double v : a.values())
        if (!std::isfinite(v)) throw std::invalid_argument("svds_sparse: matrix has non-finite entries");

    SvdResult out = lanczos_tall(a, a.cols() > a.rows(), k, options);
    canonicalize_signs(out);
    out.residuals.resize(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) {
        const double s = out.sigma(i);
        const double r1 = (a.multiply(DenseVector(out.V.col(i))) - s * out.U.col(i)).norm();
        const double r2 = (a.multiply_transpose(DenseVector(out.U.col(i))) - s * out.V.col(i)).norm();
        out.residuals[static_cast<std::size_t>(i)] = std::max(r1, r2);
    }
    return out;
}

DenseMatrix best_k(const SvdResult& svd, Index k) {
    if (k < 1 || k > svd.rank()) throw std::invalid_argument("best_k: k out of range");
    return svd.U.leftCols(k) * svd.sigma.head(k).asDiagonal() * svd.V.leftCols(k).transpose();
}

Index numerical_rank(const DenseVector& sigma, Index rows, Index cols, double relative_tol) {
    if (sigma.size() == 0 || !(sigma(0) > 0.0)) return 0;
    const double eps_floor = static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon();
    const double threshold = sigma(0) * std::max(relative_tol, eps_floor);
    Index r = 0;
    while (r < sigma.size() && sigma(r) > threshold) ++r;
    return r;
}

double lowrank_shift_distance(const SparseMatrix& a, Index k, const SvdsOptions& options) {
    if (k < 1) throw std::invalid_argument("lowrank_shift_distance: k must be >= 1");
    const double fro = a.frobenius_norm();
    if (fro == 0.0) return 0.0;
    if (k >= std::min(a.rows(), a.cols())) return 0.0;
    const SvdResult svd = svds_sparse(a, k, options);
    const double radicand = fro * fro - svd.sigma.squaredNorm();
    return std::sqrt(std::max(0.0, radicand)) / fro;
}

double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw std::invalid_argument("cosine: size mismatch");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

double cosine(const DenseVector& u, const DenseVector& v) {
    return cosine(std::span<const double>(u.data(), static_cast<std::size_t>(u.size())),
                  std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

void write_sigma_csv(std::ostream& out, std::span<const double> sigma) {
    out << "index,sigma\n";
    const auto old = out.precision(17);
    for (std::size_t i = 0; i < sigma.size(); ++i) out << (i + 1) << ',' << sigma[i] << '\n';
    out.precision(old);
}

} // namespace msmir
