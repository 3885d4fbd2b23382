// Copyright 2026 The Quartit Tomography Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file
 * Small dense linear-algebra kernel: one-sided Jacobi SVD, spectral
 * condition numbers and least-squares solves. Written against
 * Eigen::MatrixBase so that any real dense expression can be passed in.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quartit/error.hpp"

namespace quartit {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

namespace linalg {

/// Relative floor below which a singular value counts as zero.
inline constexpr double kRankTolerance = 1e-12;

template <typename Scalar> struct SVDResult {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    Vector singular_values; // nonincreasing
    Matrix u;               // rows x k, empty unless requested
    Matrix v;               // cols x k, empty unless requested

    [[nodiscard]] bool has_vectors() const { return u.size() > 0; }
};

namespace detail {

template <typename Derived> void require_finite(const Eigen::MatrixBase<Derived> &m) {
    if (m.size() == 0) {
        throw Error(ErrorCode::InvalidInput, "matrix is empty");
    }
    if (!m.allFinite()) {
        throw Error(ErrorCode::InvalidInput, "matrix has non-finite entries");
    }
}

// Hestenes one-sided Jacobi on a tall (rows >= cols) matrix. On return the
// columns of `work` are mutually orthogonal and `v` accumulates the rotations.
template <typename Scalar>
void hestenes_sweeps(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &work,
                     Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> *v) {
    using std::abs;
    using std::sqrt;
    const Eigen::Index n = work.cols();
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    constexpr int kMaxSweeps = 80;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar alpha = work.col(p).squaredNorm();
                const Scalar beta = work.col(q).squaredNorm();
                const Scalar gamma = work.col(p).dot(work.col(q));
                if (gamma == Scalar(0) || abs(gamma) <= eps * sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                const Scalar zeta = (beta - alpha) / (Scalar(2) * gamma);
                const Scalar t = (zeta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                                 (abs(zeta) + sqrt(Scalar(1) + zeta * zeta));
                const Scalar c = Scalar(1) / sqrt(Scalar(1) + t * t);
                const Scalar s = c * t;
                for (Eigen::Index i = 0; i < work.rows(); ++i) {
                    const Scalar wp = work(i, p);
                    const Scalar wq = work(i, q);
                    work(i, p) = c * wp - s * wq;
                    work(i, q) = s * wp + c * wq;
                }
                if (v != nullptr) {
                    for (Eigen::Index i = 0; i < v->rows(); ++i) {
                        const Scalar vp = (*v)(i, p);
                        const Scalar vq = (*v)(i, q);
                        (*v)(i, p) = c * vp - s * vq;
                        (*v)(i, q) = s * vp + c * vq;
                    }
                }
            }
        }
        if (!rotated) {
            return;
        }
    }
}

// Fills columns [first, cols) of `u` with an orthonormal completion of the
// leading columns (used when some singular values vanish).
template <typename Scalar>
void complete_orthonormal(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &u,
                          Eigen::Index first) {
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    Eigen::Index candidate = 0;
    for (Eigen::Index j = first; j < u.cols(); ++j) {
        for (; candidate < u.rows(); ++candidate) {
            Vector trial = Vector::Unit(u.rows(), candidate);
            for (int pass = 0; pass < 2; ++pass) {
                for (Eigen::Index k = 0; k < j; ++k) {
                    trial -= u.col(k).dot(trial) * u.col(k);
                }
            }
            const Scalar norm = trial.norm();
            if (norm > Scalar(1e-6)) {
                u.col(j) = trial / norm;
                ++candidate;
                break;
            }
        }
    }
}

} // namespace detail

/**
 * Singular value decomposition by one-sided Jacobi rotations.
 *
 * Returns min(rows, cols) singular values sorted nonincreasing. When
 * `compute_vectors` is set, `u` and `v` are thin factors with
 * m = u * diag(s) * v^T.
 */
template <typename Derived>
SVDResult<typename Derived::Scalar> svd(const Eigen::MatrixBase<Derived> &m,
                                        bool compute_vectors = false) {
    using Scalar = typename Derived::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    static_assert(!Eigen::NumTraits<Scalar>::IsComplex, "svd() expects a real matrix");
    detail::require_finite(m);

    const bool transposed = m.rows() < m.cols();
    Matrix work = transposed ? Matrix(m.transpose()) : Matrix(m);
    const Eigen::Index k = work.cols();

    Matrix v;
    if (compute_vectors) {
        v = Matrix::Identity(k, k);
    }
    detail::hestenes_sweeps<Scalar>(work, compute_vectors ? &v : nullptr);

    std::vector<Scalar> norms(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) {
        norms[static_cast<std::size_t>(j)] = work.col(j).norm();
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return norms[static_cast<std::size_t>(a)] > norms[static_cast<std::size_t>(b)];
    });

    SVDResult<Scalar> out;
    out.singular_values.resize(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        out.singular_values(j) = norms[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    }
    if (!compute_vectors) {
        return out;
    }

    Matrix left(work.rows(), k);
    Matrix right(k, k);
    const Scalar floor = out.singular_values(0) * Scalar(kRankTolerance);
    Eigen::Index nonzero = 0;
    for (Eigen::Index j = 0; j < k; ++j) {
        const Eigen::Index src = order[static_cast<std::size_t>(j)];
        right.col(j) = v.col(src);
        const Scalar sigma = out.singular_values(j);
        if (sigma > floor && sigma > Scalar(0)) {
            left.col(j) = work.col(src) / sigma;
            ++nonzero;
        }
    }
    detail::complete_orthonormal<Scalar>(left, nonzero);

    if (transposed) {
        out.u = std::move(right);
        out.v = std::move(left);
    } else {
        out.u = std::move(left);
        out.v = std::move(right);
    }
    return out;
}

/// Largest singular value.
template <typename Derived> typename Derived::Scalar spectral_norm(const Eigen::MatrixBase<Derived> &m) {
    return svd(m).singular_values(0);
}

/// sigma_max / sigma_min; +infinity when sigma_min <= 1e-12 sigma_max.
template <typename Derived>
typename Derived::Scalar condition_number_spectral(const Eigen::MatrixBase<Derived> &m) {
    using Scalar = typename Derived::Scalar;
    const auto values = svd(m).singular_values;
    const Scalar largest = values(0);
    const Scalar smallest = values(values.size() - 1);
    if (largest == Scalar(0) || smallest <= Scalar(kRankTolerance) * largest) {
        return std::numeric_limits<Scalar>::infinity();
    }
    return largest / smallest;
}

/// Numerical rank with the kernel's relative tolerance.
template <typename Derived> Eigen::Index numerical_rank(const Eigen::MatrixBase<Derived> &m) {
    using Scalar = typename Derived::Scalar;
    const auto values = svd(m).singular_values;
    const Scalar floor = values(0) * Scalar(kRankTolerance);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values(i) > floor && values(i) > Scalar(0)) {
            ++rank;
        }
    }
    return rank;
}

/// Gram matrix A^T A, the matrix whose condition number the tomography code reports.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
normal_matrix(const Eigen::MatrixBase<Derived> &a) {
    return a.transpose() * a;
}

/**
 * Minimum-norm-residual solution of a x = b for a tall, full-column-rank a.
 * Solved through the SVD, which coincides with (A^T A)^{-1} A^T b.
 */
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1>
least_squares_solve(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Scalar = typename DerivedA::Scalar;
    if (a.rows() < a.cols()) {
        throw Error(ErrorCode::InvalidInput,
                    "least squares needs rows >= cols, got " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()));
    }
    if (b.size() != a.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "observation vector has " + std::to_string(b.size()) + " entries, expected " +
                        std::to_string(a.rows()));
    }
    detail::require_finite(b);
    const auto dec = svd(a, true);
    const Scalar floor = dec.singular_values(0) * Scalar(kRankTolerance);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < dec.singular_values.size(); ++i) {
        if (dec.singular_values(i) > floor && dec.singular_values(i) > Scalar(0)) {
            ++rank;
        }
    }
    if (rank < a.cols()) {
        throw Error(ErrorCode::RankDeficient, "coefficient matrix is rank deficient: rank " +
                                                  std::to_string(rank) + " of " +
                                                  std::to_string(a.cols()) + " columns");
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> projected = dec.u.transpose() * b;
    projected.array() /= dec.singular_values.array();
    return dec.v * projected;
}

} // namespace linalg
} // namespace quartit
