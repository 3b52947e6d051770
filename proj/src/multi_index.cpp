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

#include "qsc/multi_index.hpp"

#include <limits>
#include <string>

#include "qsc/error.hpp"

namespace qsc {

namespace {

// C(a, b) with saturation.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(r);
}

void fill(std::size_t pos, int remaining, MultiIndex &cur, std::vector<MultiIndex> &out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        fill(pos + 1, remaining - v, cur, out);
    }
}

}  // namespace

std::uint64_t count_exact_degree(std::size_t length, int degree) {
    if (degree < 0) {
        return 0;
    }
    if (length == 0) {
        return degree == 0 ? 1 : 0;
    }
    return binomial(static_cast<std::uint64_t>(degree) + length - 1, length - 1);
}

std::uint64_t count_up_to_degree(std::size_t length, int degree) {
    if (degree < 0) {
        return 0;
    }
    return binomial(static_cast<std::uint64_t>(degree) + length, length);
}

std::vector<MultiIndex> exact_degree_indices(std::size_t length, int degree) {
    std::vector<MultiIndex> out;
    if (degree < 0) {
        return out;
    }
    if (length == 0) {
        if (degree == 0) {
            out.emplace_back();
        }
        return out;
    }
    MultiIndex cur(length, 0);
    fill(0, degree, cur, out);
    return out;
}

std::vector<MultiIndex> graded_indices(std::size_t length, int max_degree, std::uint64_t budget) {
    std::uint64_t total = count_up_to_degree(length, max_degree);
    if (total > budget) {
        throw BudgetExceeded(
            "index enumeration of " + std::to_string(total) + " entries exceeds budget " + std::to_string(budget));
    }
    std::vector<MultiIndex> out;
    out.reserve(total);
    for (int d = 0; d <= max_degree; ++d) {
        auto block = exact_degree_indices(length, d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace qsc
