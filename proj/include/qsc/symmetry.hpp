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
#include <utility>
#include <vector>

#include "qsc/constellation.hpp"
#include "qsc/multi_index.hpp"

namespace qsc {

enum class SymmetryClass {
    ZType,       ///< fixes every codeword constellation
    XType,       ///< permutes the constellations nontrivially
    NotSymmetry, ///< some image falls off the point set, or a constellation splits
};

const char *symmetry_class_name(SymmetryClass c);

struct SymmetryAction {
    PassiveUnitary unitary;
    /// point_map[mu][i]: where point i of codeword mu is sent. Empty unless a symmetry.
    std::vector<std::vector<PointRef>> point_map;
    /// codeword_permutation[mu] = pi(mu). Empty unless a symmetry.
    std::vector<std::size_t> codeword_permutation;
    SymmetryClass classification = SymmetryClass::NotSymmetry;
    /// For rotations from enumerate_phase_symmetries: U = diag(exp(2 pi i k_j / order)).
    std::vector<int> phase_numerators;
    int phase_order = 0;

    bool is_symmetry() const {
        return classification != SymmetryClass::NotSymmetry;
    }
    std::string describe() const;
};

SymmetryAction classify_symmetry(const QSCode &code, const PassiveUnitary &u, double tol = 1e-9);

struct PhaseSearchOptions {
    double tol = 1e-9;
    std::uint64_t candidate_budget = 1'000'000;
};

/// Tests every rotation diag(exp(2 pi i k_j / m)) with 1 <= m <= max_order,
/// 0 <= k_j < m, keeping those that are symmetries. Rotations that coincide
/// (k/m not in lowest terms) are reported once, at their smallest order, and
/// so are rotations that permute the points identically.
std::vector<SymmetryAction> enumerate_phase_symmetries(const QSCode &code, int max_order,
                                                       const PhaseSearchOptions &options = {});

/// Holomorphic polynomial g(z) = sum_d c_d z^d in the mode amplitudes.
struct VanishingPolynomial {
    std::size_t modes = 0;
    int max_degree = 0;
    /// Terms in graded-lex descending order (leading term first), nonzero only.
    std::vector<std::pair<MultiIndex, Complex>> terms;

    Complex evaluate(const Point &z) const;
    int degree() const;
    std::string to_string() const;
};

struct IdealOptions {
    double tol_ideal = 1e-8;
    std::uint64_t monomial_budget = 20'000;
};

/// Numerical null space of the evaluation matrix with rows = all code points
/// and columns = monomials z^d, 0 <= |d| <= max_degree. Returned in reduced
/// row-echelon form over monomials ordered from the highest graded-lex term
/// down, each polynomial with leading coefficient 1; listed from the
/// smallest leading term up.
std::vector<VanishingPolynomial> vanishing_ideal(const QSCode &code, int max_degree, const IdealOptions &options = {});

/// max over code points z of |g(z)|.
double verify_jump_annihilates(const QSCode &code, const VanishingPolynomial &g);

/// Orthogonal projector onto span of the polynomials' coefficient vectors,
/// over the monomial list of degree <= max_degree (ascending graded lex).
Eigen::MatrixXcd ideal_projector(const std::vector<VanishingPolynomial> &ideal, std::size_t modes, int max_degree);

}  // namespace qsc
