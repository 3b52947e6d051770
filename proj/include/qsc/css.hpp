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
#include <optional>
#include <string>
#include <vector>

#include "qsc/constellation.hpp"

namespace qsc {

using Word = std::vector<int>;  ///< string over Z_q
using GeneratorMatrix = std::vector<Word>;

/// Pair of classical codes over Z_q (q prime) with G_X G_Z^T = 0 mod q.
/// C_X = rowspace(gen_x) labels the strings inside one codeword constellation;
/// C_Z^perp = ker(gen_z) is the set of all strings that appear.
struct ClassicalCodeSpec {
    int q = 2;
    std::size_t length = 0;
    GeneratorMatrix gen_x;
    GeneratorMatrix gen_z;
};

/// Throws InvariantViolation unless q is prime, rows have the right length,
/// entries lie in [0, q) and the CSS condition holds.
void check_css(const ClassicalCodeSpec &spec);

/// Rank over Z_q by exact Gaussian elimination.
std::size_t rank_mod_q(const GeneratorMatrix &rows, int q);
/// All q^rank elements of the row space, sorted by (weight, lexicographic).
std::vector<Word> row_space(const GeneratorMatrix &rows, std::size_t length, int q);
/// All elements x with rows . x = 0 mod q, sorted by (weight, lexicographic).
std::vector<Word> kernel(const GeneratorMatrix &rows, std::size_t length, int q);

/// Number of nonzero symbols.
int weight(const Word &w);

struct CompiledCss {
    QSCode code;
    /// Logical representative x_mu of each codeword constellation (coset leader).
    std::vector<Word> representatives;
    /// strings[mu][i] is the string encoded by point i of codeword mu.
    std::vector<std::vector<Word>> strings;
};

/// Each string b maps to (alpha w^b_1, ..., alpha w^b_n), w = exp(2 pi i/q).
/// Codewords are the cosets x_mu + C_X inside C_Z^perp; representatives are
/// taken in (weight, lexicographic) order, the first not yet covered.
CompiledCss compile_css(const ClassicalCodeSpec &spec, Complex alpha);

struct CssProperties {
    std::size_t size_cx = 0;
    std::size_t size_cz_perp = 0;
    std::size_t num_codewords = 0;
    /// min weight over C_Z^perp \ C_X; empty when K = 1.
    std::optional<int> distance_x;
    /// min weight over C_X^perp \ C_Z; empty when that set is empty.
    std::optional<int> distance_z;
    /// measured on the compiled code
    std::optional<double> min_separation;
    int detection_degree = -1;
    int dephasing_order = 0;
};

/// Brute force over Z_q^n (n <= 20) plus coherent-frame measurements on the
/// compiled code.
CssProperties css_properties(const ClassicalCodeSpec &spec, Complex alpha, int max_degree = 2, double tol = 1e-6,
                             int dephasing_to = 2);

/// Matrix text format: one row per line, whitespace-separated residues;
/// blank lines and lines starting with '#' are skipped.
GeneratorMatrix parse_matrix(const std::string &text);
GeneratorMatrix read_matrix_file(const std::string &path);

}  // namespace qsc
