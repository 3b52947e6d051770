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
#include <map>

#include "qsc/constellation.hpp"
#include "qsc/multi_index.hpp"

namespace qsc {

/// Exponents of the monomial prod_i z_i^{p_i} conj(z_i)^{q_i}.
struct MomentIndex {
    MultiIndex p;
    MultiIndex q;

    int degree() const {
        return total_degree(p) + total_degree(q);
    }
    bool operator==(const MomentIndex &other) const = default;
};

/// Average of the monomial over the constellation, with every point first
/// projected onto the unit sphere.
Complex moment(const Constellation &c, const MomentIndex &idx);

/// Average of the monomial under the uniform measure on the unit sphere of
/// C^n: zero unless p == q, and (prod_i p_i!) (n-1)! / (n-1+|p|)! otherwise.
Complex sphere_average(const MomentIndex &idx, std::size_t n);

/// All moment indices of total degree exactly `degree`, graded-lex order on
/// the concatenated exponent vector (p, q).
std::vector<MomentIndex> moment_indices(std::size_t n, int degree);

struct DesignReport {
    int sphere_strength = 0;  ///< every moment of degree <= t equals the sphere average
    int matching_strength = 0; ///< every moment of degree <= t agrees across codewords
    /// Per degree: max over codewords and indices of |moment - sphere average|.
    std::map<int, double> worst_residual_per_degree;
    /// Per degree: max over codewords and indices of |moment_mu - moment_0|.
    std::map<int, double> worst_match_residual_per_degree;
    /// First index (graded lex) attaining the sphere residual at each degree.
    std::map<int, MomentIndex> worst_index_per_degree;
};

struct DesignOptions {
    double tol = 1e-9;
    std::uint64_t enumeration_budget = 10'000'000;
};

DesignReport design_strength(const QSCode &code, int t_max, const DesignOptions &options = {});

}  // namespace qsc
