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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsc {

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex &e) {
    int d = 0;
    for (int x : e) {
        d += x;
    }
    return d;
}

/// Number of length-`length` nonnegative vectors with sum exactly `degree`,
/// saturating at UINT64_MAX.
std::uint64_t count_exact_degree(std::size_t length, int degree);

/// Number of length-`length` nonnegative vectors with sum at most `degree`.
std::uint64_t count_up_to_degree(std::size_t length, int degree);

/// All length-`length` vectors with sum exactly `degree`, lexicographically
/// descending ((d,0,..) first, (..,0,d) last).
std::vector<MultiIndex> exact_degree_indices(std::size_t length, int degree);

/// Graded-lex enumeration: degree 0, 1, ..., max_degree, each block ordered
/// as in exact_degree_indices. Throws BudgetExceeded when the total count
/// would exceed `budget`.
std::vector<MultiIndex> graded_indices(std::size_t length, int max_degree, std::uint64_t budget);

}  // namespace qsc
