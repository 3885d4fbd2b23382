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

#include "quartit/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "quartit/error.hpp"

namespace quartit {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Row-major upper-triangle walk producing the component order.
std::array<ComponentSlot, kStateDim> make_slots() {
    std::array<ComponentSlot, kStateDim> slots{};
    int k = 0;
    for (int r = 0; r < kLevels; ++r) {
        slots[k++] = {r, r, false};
        for (int c = r + 1; c < kLevels; ++c) {
            slots[k++] = {r, c, false};
            slots[k++] = {r, c, true};
        }
    }
    return slots;
}

const std::array<ComponentSlot, kStateDim> &slots() {
    static const auto table = make_slots();
    return table;
}

Matrix4c psd_sqrt(const Matrix4c &m) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m);
    const Vector4d roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.cast<cd>().asDiagonal() * solver.eigenvectors().adjoint();
}

} // namespace

ComponentSlot component_slot(int index) {
    if (index < 0 || index >= kStateDim) {
        throw Error(ErrorCode::InvalidInput, "state component index out of range");
    }
    return slots()[static_cast<std::size_t>(index)];
}

int component_index(int row, int col, bool imaginary) {
    for (int k = 0; k < kStateDim; ++k) {
        const auto &s = slots()[static_cast<std::size_t>(k)];
        if (s.row == row && s.col == col && s.imaginary == imaginary) {
            return k;
        }
    }
    throw Error(ErrorCode::InvalidInput, "no state component for (" + std::to_string(row) + "," +
                                             std::to_string(col) + ")");
}

std::string component_label(int index) {
    const auto s = component_slot(index);
    const std::string pair = "rho" + std::to_string(s.row) + std::to_string(s.col);
    if (s.row == s.col) {
        return pair;
    }
    return (s.imaginary ? "Im " : "Re ") + pair;
}

StateVectorX vec(const Matrix4c &rho) {
    if (!rho.allFinite()) {
        throw Error(ErrorCode::InvalidInput, "density matrix has non-finite entries");
    }
    const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw Error(ErrorCode::InvalidInput, "matrix is not Hermitian (asymmetry " +
                                                 std::to_string(asym) + ")");
    }
    StateVectorX x;
    for (int k = 0; k < kStateDim; ++k) {
        const auto &s = slots()[static_cast<std::size_t>(k)];
        const cd v = rho(s.row, s.col);
        x(k) = s.imaginary ? v.imag() : v.real();
    }
    return x;
}

Matrix4c unvec(const StateVectorX &x) {
    Matrix4c rho = Matrix4c::Zero();
    for (int k = 0; k < kStateDim; ++k) {
        const auto &s = slots()[static_cast<std::size_t>(k)];
        if (s.row == s.col) {
            rho(s.row, s.row) = x(k);
        } else if (s.imaginary) {
            rho(s.row, s.col) += kI * x(k);
            rho(s.col, s.row) -= kI * x(k);
        } else {
            rho(s.row, s.col) += x(k);
            rho(s.col, s.row) += x(k);
        }
    }
    return rho;
}

const std::array<Matrix4c, kStateDim> &hermitian_basis() {
    static const auto basis = [] {
        std::array<Matrix4c, kStateDim> out;
        for (int k = 0; k < kStateDim; ++k) {
            StateVectorX e = StateVectorX::Zero();
            e(k) = 1.0;
            out[static_cast<std::size_t>(k)] = unvec(e);
        }
        return out;
    }();
    return basis;
}

const std::array<Matrix4c, kStateDim> &dual_basis() {
    // Tr[B rho] picks rho_ii, Re rho_rc = (rho_rc + rho_cr)/2 and
    // Im rho_rc = (rho_rc - rho_cr)/(2i).
    static const auto basis = [] {
        std::array<Matrix4c, kStateDim> out;
        for (int k = 0; k < kStateDim; ++k) {
            const auto &s = slots()[static_cast<std::size_t>(k)];
            Matrix4c b = Matrix4c::Zero();
            if (s.row == s.col) {
                b(s.row, s.row) = 1.0;
            } else if (s.imaginary) {
                b(s.col, s.row) = -0.5 * kI;
                b(s.row, s.col) = 0.5 * kI;
            } else {
                b(s.col, s.row) = 0.5;
                b(s.row, s.col) = 0.5;
            }
            out[static_cast<std::size_t>(k)] = b;
        }
        return out;
    }();
    return basis;
}

DensityMatrix random_density_matrix(std::uint64_t seed, PurityMode mode) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto gaussian = [&] {
        const double re = normal(rng);
        const double im = normal(rng);
        return cd(re, im);
    };
    if (mode == PurityMode::Pure) {
        Vector4c psi;
        for (int i = 0; i < kLevels; ++i) {
            psi(i) = gaussian();
        }
        psi.normalize();
        return psi * psi.adjoint();
    }
    Matrix4c g;
    for (int r = 0; r < kLevels; ++r) {
        for (int c = 0; c < kLevels; ++c) {
            g(r, c) = gaussian();
        }
    }
    Matrix4c rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Exact Hermiticity after rounding.
    return 0.5 * (rho + rho.adjoint());
}

DensityMatrix clip_to_physical(const Matrix4c &rho) {
    const Matrix4c h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h);
    Vector4d lambda = solver.eigenvalues().cwiseMax(0.0);
    const double total = lambda.sum();
    if (total <= 0.0) {
        return Matrix4c::Identity() / 4.0;
    }
    lambda /= total;
    return solver.eigenvectors() * lambda.cast<cd>().asDiagonal() * solver.eigenvectors().adjoint();
}

double fidelity(const Matrix4c &rho, const Matrix4c &sigma) {
    const Matrix4c root = psd_sqrt(0.5 * (rho + rho.adjoint()));
    const Matrix4c inner = root * (0.5 * (sigma + sigma.adjoint())) * root;
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(0.5 * (inner + inner.adjoint()));
    const double trace_root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return trace_root * trace_root;
}

} // namespace quartit
