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

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/constellation.hpp"
#include "qsc/multi_index.hpp"

namespace qsc {

/// Normally ordered monomial prod_i (a_i^dag)^{r_i} a_i^{s_i}.
struct MonomialError {
    MultiIndex r;
    MultiIndex s;

    static MonomialError identity(std::size_t modes);
    static MonomialError loss(std::size_t modes, std::size_t mode, int power = 1);

    int degree() const {
        return total_degree(r) + total_degree(s);
    }
    MonomialError adjoint() const {
        return {s, r};
    }
    std::string to_string() const;
    bool operator==(const MonomialError &other) const = default;
};

/// <z|w> = exp(-|z|^2/2 - |w|^2/2 + conj(z).w).
Complex coherent_overlap(const Point &z, const Point &w);

/// sum_{z,w in C} <z|w>, the squared norm of the unnormalized codeword.
double codeword_norm_sq(const Constellation &c);

/// Stirling number of the second kind S(k, j), exact for k <= 20.
std::int64_t stirling2(int k, int j);

/// Caches every pairwise overlap and codeword norm of one code, so that many
/// KL matrices can be evaluated without recomputing exponentials.
class KLEvaluator {
   public:
    explicit KLEvaluator(const QSCode &code);

    const QSCode &code() const {
        return code_;
    }
    /// Entry (mu, nu) = (N_mu N_nu)^{-1/2} sum conj(z)^r w^s <z|w>.
    Eigen::MatrixXcd kl_matrix(const MonomialError &e) const;
    /// KL matrix of n_mode^k, through its normally ordered Stirling expansion.
    Eigen::MatrixXcd dephasing_matrix(std::size_t mode, int power) const;
    /// Normalized codeword Gram matrix (the identity error).
    const Eigen::MatrixXcd &gram() const {
        return gram_;
    }
    /// G^{-1/2} A G^{-1/2}: the KL matrix in an orthonormal basis of the code space.
    Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd &a) const;

   private:
    QSCode code_;
    std::vector<double> norms_;
    // overlaps_[mu][nu](i, j) = <z_i|w_j>, z in C_mu, w in C_nu
    std::vector<std::vector<Eigen::MatrixXcd>> overlaps_;
    Eigen::MatrixXcd gram_;
    Eigen::MatrixXcd gram_inv_sqrt_;
};

Eigen::MatrixXcd kl_matrix(const QSCode &code, const MonomialError &e);

struct ErrorRow {
    MonomialError error;          ///< for dephasing rows: r = s = 0
    bool dephasing = false;       ///< row is n_mode^power
    std::size_t mode = 0;
    int power = 0;
    Eigen::MatrixXcd raw;         ///< KL matrix in the normalized codeword frame
    Eigen::MatrixXcd orthonormal; ///< KL matrix in the symmetrically orthonormalized frame
    Complex lambda;               ///< trace(orthonormal) / K
    double deviation = 0.0;       ///< max |orthonormal - lambda I|
    bool pass = false;

    std::string name() const;
};

struct DetectionReport {
    std::vector<ErrorRow> rows;
    int max_degree = 0;
    double tol = 0.0;
    int detection_degree = -1; ///< largest D: every monomial of degree <= D passes
    int dephasing_order = 0;   ///< largest k: every n_i^j with j <= k passes
};

struct DetectionOptions {
    double tol = 1e-6;
    int include_dephasing_to = 0;
    std::uint64_t enumeration_budget = 1'000'000;
};

/// Monomials with |r| + |s| <= max_degree in graded-lex order of (r, s),
/// followed by the dephasing rows n_i^k, i over modes, k = 1..include_dephasing_to.
DetectionReport detection_report(const QSCode &code, int max_degree, const DetectionOptions &options = {});

/// Largest supported total photon number for coherent-frame evaluation.
inline constexpr double kMaxRadiusSq = 600.0;

}  // namespace qsc
