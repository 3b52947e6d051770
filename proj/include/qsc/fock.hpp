// Copyright 2026 The qsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "qsc/constellation.hpp"
#include "qsc/kl.hpp"

namespace qsc {

/// Truncated Fock space: `cutoff` levels (photon numbers 0..cutoff-1) per mode.
struct FockConfig {
    int cutoff = 60;
    std::size_t modes = 1;
    std::size_t max_dimension = 4096;
    double max_tail = 1e-12; ///< allowed coherent-state probability mass at or above the cutoff

    static FockConfig for_code(const QSCode &code, int cutoff) {
        FockConfig cfg;
        cfg.cutoff = cutoff;
        cfg.modes = code.modes();
        return cfg;
    }
};

inline constexpr std::size_t kMaxFockModes = 2;

/// Probability that a Poisson(mean) variable is >= cutoff.
double poisson_tail(double mean, int cutoff);

/// Coherent state |z> in the truncated basis, mode 0 most significant.
Eigen::VectorXcd coherent_state(const Point &z, const FockConfig &cfg);

/// Normalized sum_{z in C_mu} |z> for every codeword, normalized in the
/// truncated space.
std::vector<Eigen::VectorXcd> embed_codewords(const QSCode &code, const FockConfig &cfg);

/// KL matrix <c_mu| ad^r a^s |c_nu> from truncated ladder operators.
Eigen::MatrixXcd kl_matrix_fock(const QSCode &code, const MonomialError &e, const FockConfig &cfg);

/// Entanglement fidelity of transpose-channel recovery. `mapped[k]` holds
/// E_k V, the Kraus operators applied to an orthonormal code basis V (D x K).
double transpose_channel_fidelity(std::span<const Eigen::MatrixXcd> mapped);

/// Symmetrically orthonormalized embedded codewords (D x K).
Eigen::MatrixXcd orthonormal_code_basis(const QSCode &code, const FockConfig &cfg);

/// Pure loss with transmissivity 1 - gamma on every mode, then transpose-channel recovery.
double loss_channel_fidelity(const QSCode &code, double gamma, const FockConfig &cfg);

struct DephasingOptions {
    int nodes = 64;                 ///< Gauss-Hermite nodes per mode
    bool check_convergence = true;  ///< also evaluate with 2 * nodes
    double convergence_tol = 1e-9;
};

/// Gaussian dephasing rho -> E_theta[exp(i theta n) rho exp(-i theta n)], theta ~ N(0, sigma^2)
/// on every mode, then transpose-channel recovery.
double dephasing_channel_fidelity(const QSCode &code, double sigma, const FockConfig &cfg,
                                  const DephasingOptions &options = {});

/// Gauss-Hermite nodes and weights for weight exp(-x^2) (Golub-Welsch).
void gauss_hermite(int nodes, std::vector<double> &x, std::vector<double> &w);

}  // namespace qsc
