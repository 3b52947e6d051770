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

#include <map>
#include <string>
#include <vector>

#include "qsc/constellation.hpp"

namespace qsc {

/// Parameters understood by the catalog builders; each builder reads only
/// the fields it needs.
struct BuildOptions {
    int S = 2;             ///< cat: points per codeword
    int K = 2;             ///< cat, complex families: number of codewords
    int n = 2;             ///< hypercube, orthoplex, complex families: modes
    int p = 3;             ///< complex families: order of the root of unity
    std::string partition; ///< polytopes with several documented partitions; empty = default
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::size_t modes = 0;
    std::size_t num_points = 0;
    std::size_t num_codewords = 0;
    BuildOptions options;
    std::vector<std::string> partitions; ///< accepted values of BuildOptions::partition
    /// Filled by catalog_properties(): measured at radius_sq = 1 by the
    /// library's own moment and geometry routines.
    std::map<std::string, double> expected_properties;
};

/// Builds a catalog code on the sphere ||z||^2 = radius_sq.
///
///  cat               S*K points alpha exp(2 pi i k/(S K)), codeword k mod K
///  hypercube         (+-1 +-i, ...)/sqrt(2n), codeword = parity of minus signs
///  orthoplex         +-e_j and +-i e_j; codeword 0 real axes, 1 imaginary axes
///  cell24            Hurwitz units; partitions 16-cells (K=3), hexagons (K=4), squares (K=6)
///  cell600           icosians; partitions 24-cells (K=5), 16-cells (K=15)
///  complex_hypercube (w^b_1, ..., w^b_n)/sqrt(n), w = exp(2 pi i/p), codeword sum(b) mod K
///  complex_orthoplex w^k e_j, codeword k mod K
///  hessian           27 vertices of the Hessian polyhedron in C^3, K=3
///
/// The real-to-complex identification is (x1, x2, x3, x4, ...) -> (x1 + i x2, x3 + i x4, ...).
QSCode build(const std::string &name, double radius_sq, const BuildOptions &options = {});

/// Every catalog entry with its default options.
std::vector<CatalogEntry> list_catalog();

/// Measures separation and design strengths of an entry's code at radius_sq = 1.
CatalogEntry catalog_properties(CatalogEntry entry, int t_max = 8);

/// Generators of the passive symmetry group used to construct the real
/// polytopes "cell24" and "cell600" (right quaternion multiplications).
std::vector<PassiveUnitary> polytope_generators(const std::string &name);

/// catalog name plus non-default options, e.g. "cat(S=3,K=2)".
std::string entry_label(const std::string &name, const BuildOptions &options);

}  // namespace qsc
