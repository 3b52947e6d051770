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

#include "qsc/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>

#include "qsc/error.hpp"
#include "qsc/parallel.hpp"

namespace qsc {

namespace {

// Odometer increment over [0, m)^n, last coordinate fastest; false after wrapping.
bool next_tuple(std::vector<int> &k, int m) {
    for (std::size_t j = k.size(); j > 0; --j) {
        if (++k[j - 1] < m) {
            return true;
        }
        k[j - 1] = 0;
    }
    return false;
}

}  // namespace

const char *symmetry_class_name(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::ZType:
            return "Z-type";
        case SymmetryClass::XType:
            return "X-type";
        case SymmetryClass::NotSymmetry:
            return "not-a-symmetry";
    }
    return "unknown";
}

std::string SymmetryAction::describe() const {
    if (phase_order > 0) {
        std::string terms;
        for (std::size_t j = 0; j < phase_numerators.size(); ++j) {
            if (phase_numerators[j] == 0) {
                continue;
            }
            std::string sub = phase_numerators.size() > 1 ? std::to_string(j + 1) : "";
            terms += (terms.empty() ? "" : " + ") +
                     (phase_numerators[j] == 1 ? std::string() : std::to_string(phase_numerators[j])) + "n" + sub;
        }
        if (terms.empty()) {
            return "I";
        }
        return "exp(2 pi i (" + terms + ")/" + std::to_string(phase_order) + ")";
    }
    return "U";
}

SymmetryAction classify_symmetry(const QSCode &code, const PassiveUnitary &u, double tol) {
    if (u.modes() != code.modes()) {
        throw DimensionMismatch("classify_symmetry: unitary acts on " + std::to_string(u.modes()) +
                                " modes, code has " + std::to_string(code.modes()));
    }
    SymmetryAction action{u, {}, {}, SymmetryClass::NotSymmetry, {}, 0};
    const auto &cw = code.codewords();
    std::vector<PointRef> refs;
    for (std::size_t mu = 0; mu < cw.size(); ++mu) {
        for (std::size_t i = 0; i < cw[mu].size(); ++i) {
            refs.push_back({mu, i});
        }
    }
    auto at = [&](const PointRef &r) -> const Point & { return cw[r.codeword][r.index]; };

    std::vector<std::vector<PointRef>> map(cw.size());
    std::vector<bool> hit(refs.size(), false);
    for (std::size_t mu = 0; mu < cw.size(); ++mu) {
        for (std::size_t i = 0; i < cw[mu].size(); ++i) {
            Point image = u.apply(cw[mu][i]);
            std::size_t best = refs.size();
            double best_d = tol;
            for (std::size_t k = 0; k < refs.size(); ++k) {
                double d = chordal_distance(image, at(refs[k]));
                if (d <= best_d) {
                    best = k;
                    best_d = d;
                }
            }
            if (best == refs.size() || hit[best]) {
                return action;
            }
            hit[best] = true;
            map[mu].push_back(refs[best]);
        }
    }
    std::vector<std::size_t> perm(cw.size());
    std::vector<bool> used(cw.size(), false);
    for (std::size_t mu = 0; mu < cw.size(); ++mu) {
        std::size_t target = map[mu].front().codeword;
        for (const auto &r : map[mu]) {
            if (r.codeword != target) {
                return action;
            }
        }
        if (used[target] || cw[target].size() != cw[mu].size()) {
            return action;
        }
        used[target] = true;
        perm[mu] = target;
    }
    bool trivial = true;
    for (std::size_t mu = 0; mu < perm.size(); ++mu) {
        trivial = trivial && perm[mu] == mu;
    }
    action.point_map = std::move(map);
    action.codeword_permutation = std::move(perm);
    action.classification = trivial ? SymmetryClass::ZType : SymmetryClass::XType;
    return action;
}

std::vector<SymmetryAction> enumerate_phase_symmetries(const QSCode &code, int max_order,
                                                       const PhaseSearchOptions &options) {
    if (max_order < 1) {
        throw InvariantViolation("enumerate_phase_symmetries: max_order must be at least 1");
    }
    const std::size_t n = code.modes();
    std::uint64_t total = 0;
    for (int m = 1; m <= max_order; ++m) {
        double c = std::pow(static_cast<double>(m), static_cast<double>(n));
        if (c > static_cast<double>(options.candidate_budget) || total + static_cast<std::uint64_t>(c) > options.candidate_budget) {
            throw BudgetExceeded("enumerate_phase_symmetries: candidate count exceeds budget " +
                                 std::to_string(options.candidate_budget));
        }
        total += static_cast<std::uint64_t>(c);
    }

    // Candidates in lowest terms only: gcd(m, k_1, ..., k_n) == 1.
    std::vector<std::pair<int, std::vector<int>>> candidates;
    for (int m = 1; m <= max_order; ++m) {
        std::vector<int> k(n, 0);
        do {
            int g = m;
            for (int x : k) {
                g = std::gcd(g, x);
            }
            if (g == 1) {
                candidates.emplace_back(m, k);
            }
        } while (next_tuple(k, m));
    }

    std::vector<std::optional<SymmetryAction>> results(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t c) {
        const auto &[m, k] = candidates[c];
        std::vector<double> thetas(n);
        for (std::size_t j = 0; j < n; ++j) {
            thetas[j] = 2.0 * std::numbers::pi * k[j] / m;
        }
        SymmetryAction a = classify_symmetry(code, PassiveUnitary::phase_rotation(thetas), options.tol);
        if (a.is_symmetry()) {
            a.phase_numerators = k;
            a.phase_order = m;
            results[c] = std::move(a);
        }
    });
    // Rotations that move every point the same way act identically on the codespace; keep the first.
    std::vector<SymmetryAction> out;
    for (auto &r : results) {
        if (!r) {
            continue;
        }
        bool seen = std::any_of(out.begin(), out.end(), [&](const SymmetryAction &a) { return a.point_map == r->point_map; });
        if (!seen) {
            out.push_back(std::move(*r));
        }
    }
    return out;
}

namespace {

Complex eval_monomial(const Point &z, const MultiIndex &d) {
    Complex v = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (int k = 0; k < d[i]; ++k) {
            v *= z[i];
        }
    }
    return v;
}

// Leading-term-first ordering: highest degree first, graded-lex descending within a degree.
std::vector<std::size_t> leading_order(const std::vector<MultiIndex> &ascending) {
    std::vector<std::size_t> order(ascending.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return total_degree(ascending[a]) > total_degree(ascending[b]);
    });
    return order;
}

}  // namespace

Complex VanishingPolynomial::evaluate(const Point &z) const {
    if (z.modes() != modes) {
        throw DimensionMismatch("polynomial in " + std::to_string(modes) + " variables evaluated at a point with " +
                                std::to_string(z.modes()) + " modes");
    }
    Complex sum = 0.0;
    for (const auto &[d, c] : terms) {
        sum += c * eval_monomial(z, d);
    }
    return sum;
}

int VanishingPolynomial::degree() const {
    int d = 0;
    for (const auto &[e, c] : terms) {
        d = std::max(d, total_degree(e));
    }
    return d;
}

std::string VanishingPolynomial::to_string() const {
    std::string out;
    char buf[96];
    double scale = 0.0;
    for (const auto &[d, c] : terms) {
        scale = std::max(scale, std::abs(c));
    }
    const double zero = 1e-11 * scale;
    for (const auto &[d, c] : terms) {
        std::string mono;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0) {
                continue;
            }
            std::string var = modes > 1 ? "z" + std::to_string(i + 1) : "z";
            mono += (mono.empty() ? "" : "*") + var + (d[i] > 1 ? "^" + std::to_string(d[i]) : "");
        }
        double re = std::abs(c.real()) < zero ? 0.0 : c.real();
        double im = std::abs(c.imag()) < zero ? 0.0 : c.imag();
        if (re == 0.0 && im == 0.0) {
            continue;
        }
        if (im == 0.0) {
            std::snprintf(buf, sizeof buf, "%.10g", re);
        } else if (re == 0.0) {
            std::snprintf(buf, sizeof buf, "%.10gi", im);
        } else {
            std::snprintf(buf, sizeof buf, "(%.10g%+.10gi)", re, im);
        }
        std::string coef = buf;
        std::string term;
        if (mono.empty()) {
            term = coef;
        } else if (coef == "1") {
            term = mono;
        } else if (coef == "-1") {
            term = "-" + mono;
        } else {
            term = coef + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<VanishingPolynomial> vanishing_ideal(const QSCode &code, int max_degree, const IdealOptions &options) {
    if (max_degree < 1) {
        throw InvariantViolation("vanishing_ideal: max_degree must be at least 1");
    }
    const std::size_t n = code.modes();
    auto monomials = graded_indices(n, max_degree, options.monomial_budget);
    const auto cols = static_cast<Eigen::Index>(monomials.size());

    std::vector<const Point *> points;
    for (const auto &c : code.codewords()) {
        for (const auto &p : c.points()) {
            points.push_back(&p);
        }
    }
    const auto rows = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXcd v(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            v(i, j) = eval_monomial(*points[i], monomials[j]);
        }
    }
    Eigen::VectorXd scale(cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        double s = v.col(j).cwiseAbs().maxCoeff();
        scale(j) = s > 0.0 ? s : 1.0;
        v.col(j) /= scale(j);
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v, Eigen::ComputeFullV);
    const auto &sigma = svd.singularValues();
    double sigma_max = sigma.size() ? sigma(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); ++k) {
        if (sigma(k) > options.tol_ideal * sigma_max) {
            ++rank;
        }
    }
    const Eigen::Index nullity = cols - rank;
    if (nullity == 0) {
        return {};
    }
    Eigen::MatrixXcd basis = svd.matrixV().rightCols(nullity);
    for (Eigen::Index j = 0; j < cols; ++j) {
        basis.row(j) /= scale(j);
    }

    // Reduced row echelon form with columns in leading-term-first order.
    auto order = leading_order(monomials);
    Eigen::MatrixXcd rr(nullity, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        rr.col(j) = basis.row(order[j]).transpose();
    }
    double pivot_floor = 1e-10 * rr.cwiseAbs().maxCoeff();
    Eigen::Index lead = 0;
    for (Eigen::Index col = 0; col < cols && lead < nullity; ++col) {
        Eigen::Index best = lead;
        for (Eigen::Index r = lead + 1; r < nullity; ++r) {
            if (std::abs(rr(r, col)) > std::abs(rr(best, col))) {
                best = r;
            }
        }
        if (std::abs(rr(best, col)) <= pivot_floor) {
            continue;
        }
        rr.row(lead).swap(rr.row(best));
        rr.row(lead) /= rr(lead, col);
        for (Eigen::Index r = 0; r < nullity; ++r) {
            if (r != lead) {
                rr.row(r) -= rr(r, col) * rr.row(lead);
            }
        }
        ++lead;
    }

    std::vector<VanishingPolynomial> out;
    for (Eigen::Index r = 0; r < lead; ++r) {
        VanishingPolynomial g;
        g.modes = n;
        g.max_degree = max_degree;
        double row_max = rr.row(r).cwiseAbs().maxCoeff();
        for (Eigen::Index j = 0; j < cols; ++j) {
            Complex c = rr(r, j);
            if (std::abs(c) > 1e-13 * row_max) {
                g.terms.emplace_back(monomials[order[j]], c);
            }
        }
        out.push_back(std::move(g));
    }
    // Smallest leading term first.
    std::reverse(out.begin(), out.end());
    return out;
}

double verify_jump_annihilates(const QSCode &code, const VanishingPolynomial &g) {
    double worst = 0.0;
    for (const auto &c : code.codewords()) {
        for (const auto &p : c.points()) {
            worst = std::max(worst, std::abs(g.evaluate(p)));
        }
    }
    return worst;
}

Eigen::MatrixXcd ideal_projector(const std::vector<VanishingPolynomial> &ideal, std::size_t modes, int max_degree) {
    auto monomials = graded_indices(modes, max_degree, 10'000'000);
    const auto cols = static_cast<Eigen::Index>(monomials.size());
    if (ideal.empty()) {
        return Eigen::MatrixXcd::Zero(cols, cols);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cols, static_cast<Eigen::Index>(ideal.size()));
    for (std::size_t k = 0; k < ideal.size(); ++k) {
        for (const auto &[d, c] : ideal[k].terms) {
            auto it = std::find(monomials.begin(), monomials.end(), d);
            if (it == monomials.end()) {
                throw DimensionMismatch("ideal_projector: polynomial exceeds max_degree");
            }
            m(it - monomials.begin(), static_cast<Eigen::Index>(k)) = c;
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(cols, m.cols());
    return q * q.adjoint();
}

}  // namespace qsc
