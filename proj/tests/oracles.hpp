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

// Independent reference computations and random generators for tests.
// Nothing here calls into the library's SVD or evolution code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using cd = std::complex<double>;

// Singular values of a through the eigenvalues of a^T a, largest first.
inline Eigen::VectorXd singular_values_via_gram(const Eigen::MatrixXd &a) {
    const Eigen::MatrixXd gram = a.transpose() * a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    Eigen::VectorXd values = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().reverse();
    const Eigen::Index k = std::min(a.rows(), a.cols());
    return values.head(k);
}

// Largest singular value by power iteration on a^T a.
inline double power_iteration_norm(const Eigen::MatrixXd &a, int iterations = 2000) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(a.cols());
    v(0) += 0.37; // break symmetry with any structured singular vector
    v.normalize();
    double lambda = 0.0;
    for (int i = 0; i < iterations; ++i) {
        Eigen::VectorXd w = a.transpose() * (a * v);
        const double norm = w.norm();
        if (norm == 0.0) {
            return 0.0;
        }
        const double next = v.dot(w);
        v = w / norm;
        if (std::abs(next - lambda) <= 1e-15 * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(lambda);
}

// exp(m) by scaling and squaring with a truncated Taylor series.
inline Eigen::Matrix4cd taylor_expm(const Eigen::Matrix4cd &m) {
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::Matrix4cd scaled = m / std::pow(2.0, squarings);
    Eigen::Matrix4cd term = Eigen::Matrix4cd::Identity();
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Identity();
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

inline double spectral_norm_complex(const Eigen::Matrix4cd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m.adjoint() * m);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

inline Eigen::MatrixXd random_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = normal(rng);
        }
    }
    return m;
}

inline Eigen::Matrix4cd random_hermitian(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix4cd g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cd(re, im);
        }
    }
    return 0.5 * (g + g.adjoint());
}

} // namespace oracle
