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

#include "qsc/moments.hpp"

#include <cmath>
#include <string>

#include "qsc/error.hpp"
#include "qsc/parallel.hpp"

namespace qsc {

namespace {

void check_index(const MomentIndex &idx, std::size_t n) {
    if (idx.p.size() != n || idx.q.size() != n) {
        throw DimensionMismatch("moment index has length " + std::to_string(idx.p.size()) + "/" +
                                std::to_string(idx.q.size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (idx.p[i] < 0 || idx.q[i] < 0) {
            throw InvariantViolation("moment exponents must be nonnegative");
        }
    }
}

// Powers of the normalized coordinates: holo[i][k] = zhat_i^k, anti[i][k] = conj(zhat_i)^k.
struct PowerTable {
    std::vector<std::vector<Complex>> holo;
    std::vector<std::vector<Complex>> anti;
};

std::vector<PowerTable> power_tables(const Constellation &c, int max_power) {
    std::vector<PowerTable> tables;
    tables.reserve(c.size());
    for (const auto &p : c.points()) {
        double norm = std::sqrt(p.norm_sq());
        if (norm == 0.0) {
            throw NumericalError("cannot normalize the zero point onto the unit sphere");
        }
        PowerTable t;
        t.holo.assign(p.modes(), std::vector<Complex>(max_power + 1));
        t.anti.assign(p.modes(), std::vector<Complex>(max_power + 1));
        for (std::size_t i = 0; i < p.modes(); ++i) {
            Complex z = p[i] / norm;
            t.holo[i][0] = t.anti[i][0] = 1.0;
            for (int k = 1; k <= max_power; ++k) {
                t.holo[i][k] = t.holo[i][k - 1] * z;
                t.anti[i][k] = t.anti[i][k - 1] * std::conj(z);
            }
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

Complex table_moment(const std::vector<PowerTable> &tables, const MomentIndex &idx) {
    Complex sum = 0.0;
    for (const auto &t : tables) {
        Complex term = 1.0;
        for (std::size_t i = 0; i < idx.p.size(); ++i) {
            term *= t.holo[i][idx.p[i]] * t.anti[i][idx.q[i]];
        }
        sum += term;
    }
    return sum / static_cast<double>(tables.size());
}

}  // namespace

Complex moment(const Constellation &c, const MomentIndex &idx) {
    check_index(idx, c.modes());
    int max_power = 0;
    for (std::size_t i = 0; i < idx.p.size(); ++i) {
        max_power = std::max({max_power, idx.p[i], idx.q[i]});
    }
    return table_moment(power_tables(c, max_power), idx);
}

Complex sphere_average(const MomentIndex &idx, std::size_t n) {
    if (n < 1) {
        throw InvariantViolation("sphere_average needs n >= 1");
    }
    check_index(idx, n);
    if (idx.p != idx.q) {
        return 0.0;
    }
    double log_value = std::lgamma(static_cast<double>(n)) - std::lgamma(static_cast<double>(n + total_degree(idx.p)));
    for (int x : idx.p) {
        log_value += std::lgamma(x + 1.0);
    }
    return std::exp(log_value);
}

std::vector<MomentIndex> moment_indices(std::size_t n, int degree) {
    std::vector<MomentIndex> out;
    for (auto &e : exact_degree_indices(2 * n, degree)) {
        out.push_back({MultiIndex(e.begin(), e.begin() + n), MultiIndex(e.begin() + n, e.end())});
    }
    return out;
}

DesignReport design_strength(const QSCode &code, int t_max, const DesignOptions &options) {
    if (t_max < 0) {
        throw InvariantViolation("design_strength: t_max must be nonnegative");
    }
    const std::size_t n = code.modes();
    std::uint64_t total = count_up_to_degree(2 * n, t_max);
    if (total > options.enumeration_budget) {
        throw BudgetExceeded("design_strength: " + std::to_string(total) + " moment indices exceed budget " +
                             std::to_string(options.enumeration_budget));
    }
    std::vector<MomentIndex> indices;
    indices.reserve(total);
    for (int d = 0; d <= t_max; ++d) {
        auto block = moment_indices(n, d);
        indices.insert(indices.end(), block.begin(), block.end());
    }

    std::vector<std::vector<PowerTable>> tables;
    for (const auto &c : code.codewords()) {
        tables.push_back(power_tables(c, t_max));
    }

    std::vector<double> sphere_res(indices.size());
    std::vector<double> match_res(indices.size());
    parallel_for(indices.size(), [&](std::size_t k) {
        const auto &idx = indices[k];
        Complex target = sphere_average(idx, n);
        Complex first = 0.0;
        double worst_sphere = 0.0;
        double worst_match = 0.0;
        for (std::size_t mu = 0; mu < tables.size(); ++mu) {
            Complex m = table_moment(tables[mu], idx);
            if (mu == 0) {
                first = m;
            }
            worst_sphere = std::max(worst_sphere, std::abs(m - target));
            worst_match = std::max(worst_match, std::abs(m - first));
        }
        sphere_res[k] = worst_sphere;
        match_res[k] = worst_match;
    });

    DesignReport report;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        int d = indices[k].degree();
        auto [it, fresh] = report.worst_residual_per_degree.try_emplace(d, sphere_res[k]);
        if (fresh) {
            report.worst_index_per_degree.emplace(d, indices[k]);
        } else if (sphere_res[k] > it->second) {
            it->second = sphere_res[k];
            report.worst_index_per_degree[d] = indices[k];
        }
        auto [jt, fresh_match] = report.worst_match_residual_per_degree.try_emplace(d, match_res[k]);
        if (!fresh_match) {
            jt->second = std::max(jt->second, match_res[k]);
        }
    }
    auto strength = [&](const std::map<int, double> &residuals) {
        int t = -1;
        for (const auto &[d, r] : residuals) {
            if (r > options.tol) {
                break;
            }
            t = d;
        }
        return t;
    };
    report.sphere_strength = strength(report.worst_residual_per_degree);
    report.matching_strength = strength(report.worst_match_residual_per_degree);
    return report;
}

}  // namespace qsc
