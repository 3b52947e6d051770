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

#include "qsc/kl.hpp"

#include <cmath>
#include <sstream>

#include "qsc/error.hpp"
#include "qsc/parallel.hpp"

namespace qsc {

namespace {

Complex monomial(const Point &z, const MultiIndex &e, bool conjugate) {
    Complex v = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        Complex zi = conjugate ? std::conj(z[i]) : z[i];
        for (int k = 0; k < e[i]; ++k) {
            v *= zi;
        }
    }
    return v;
}

void check_error(const MonomialError &e, std::size_t n) {
    if (e.r.size() != n || e.s.size() != n) {
        throw DimensionMismatch("monomial error has length " + std::to_string(e.r.size()) + "/" +
                                std::to_string(e.s.size()) + ", code has " + std::to_string(n) + " modes");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (e.r[i] < 0 || e.s[i] < 0) {
            throw InvariantViolation("monomial exponents must be nonnegative");
        }
    }
}

}  // namespace

MonomialError MonomialError::identity(std::size_t modes) {
    return {MultiIndex(modes, 0), MultiIndex(modes, 0)};
}

MonomialError MonomialError::loss(std::size_t modes, std::size_t mode, int power) {
    MonomialError e = identity(modes);
    e.s.at(mode) = power;
    return e;
}

std::string MonomialError::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::string sub = r.size() > 1 ? std::to_string(i + 1) : "";
        if (r[i] > 0) {
            out += (out.empty() ? "" : " ") + ("ad" + sub) + (r[i] > 1 ? "^" + std::to_string(r[i]) : "");
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::string sub = s.size() > 1 ? std::to_string(i + 1) : "";
        if (s[i] > 0) {
            out += (out.empty() ? "" : " ") + ("a" + sub) + (s[i] > 1 ? "^" + std::to_string(s[i]) : "");
        }
    }
    return out.empty() ? "I" : out;
}

Complex coherent_overlap(const Point &z, const Point &w) {
    if (z.modes() != w.modes()) {
        throw DimensionMismatch("coherent_overlap: points have " + std::to_string(z.modes()) + " and " +
                                std::to_string(w.modes()) + " modes");
    }
    Complex exponent = -0.5 * (z.norm_sq() + w.norm_sq());
    for (std::size_t i = 0; i < z.modes(); ++i) {
        exponent += std::conj(z[i]) * w[i];
    }
    return std::exp(exponent);
}

double codeword_norm_sq(const Constellation &c) {
    Complex sum = 0.0;
    for (const auto &z : c.points()) {
        for (const auto &w : c.points()) {
            sum += coherent_overlap(z, w);
        }
    }
    if (std::abs(sum.imag()) > 1e-12 * std::max(1.0, std::abs(sum.real()))) {
        throw NumericalError("codeword norm of '" + c.label() + "' is not real: imaginary part " +
                             std::to_string(sum.imag()));
    }
    if (!(sum.real() > 1e-12)) {
        throw NumericalError("codeword '" + c.label() + "' has vanishing norm " + std::to_string(sum.real()) +
                             "; amplitudes too small to resolve the superposition");
    }
    return sum.real();
}

std::int64_t stirling2(int k, int j) {
    if (k < 0 || j < 0 || k > 20) {
        throw InvariantViolation("stirling2 supports 0 <= k <= 20");
    }
    if (j > k) {
        return 0;
    }
    // S(k, j) = j S(k-1, j) + S(k-1, j-1)
    std::vector<std::vector<std::int64_t>> table(k + 1, std::vector<std::int64_t>(k + 1, 0));
    table[0][0] = 1;
    for (int a = 1; a <= k; ++a) {
        for (int b = 1; b <= a; ++b) {
            table[a][b] = b * table[a - 1][b] + table[a - 1][b - 1];
        }
    }
    return table[k][j];
}

KLEvaluator::KLEvaluator(const QSCode &code) : code_(code) {
    if (code_.radius_sq() > kMaxRadiusSq) {
        throw NumericalError("radius_sq = " + std::to_string(code_.radius_sq()) +
                             " exceeds the supported maximum of 600 photons");
    }
    const auto &cw = code_.codewords();
    const std::size_t k = cw.size();
    for (const auto &c : cw) {
        norms_.push_back(codeword_norm_sq(c));
    }
    overlaps_.assign(k, std::vector<Eigen::MatrixXcd>(k));
    for (std::size_t mu = 0; mu < k; ++mu) {
        for (std::size_t nu = 0; nu < k; ++nu) {
            Eigen::MatrixXcd o(cw[mu].size(), cw[nu].size());
            for (std::size_t i = 0; i < cw[mu].size(); ++i) {
                for (std::size_t j = 0; j < cw[nu].size(); ++j) {
                    o(i, j) = coherent_overlap(cw[mu][i], cw[nu][j]);
                }
            }
            overlaps_[mu][nu] = std::move(o);
        }
    }
    gram_ = kl_matrix(MonomialError::identity(code_.modes()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram_);
    double floor = eig.eigenvalues().minCoeff();
    if (!(floor > 1e-12)) {
        throw NumericalError("codewords are numerically linearly dependent (Gram eigenvalue " +
                             std::to_string(floor) + ")");
    }
    gram_inv_sqrt_ = eig.operatorInverseSqrt();
}

Eigen::MatrixXcd KLEvaluator::kl_matrix(const MonomialError &e) const {
    check_error(e, code_.modes());
    const auto &cw = code_.codewords();
    const std::size_t k = cw.size();
    std::vector<Eigen::VectorXcd> left(k);
    std::vector<Eigen::VectorXcd> right(k);
    for (std::size_t mu = 0; mu < k; ++mu) {
        left[mu].resize(cw[mu].size());
        right[mu].resize(cw[mu].size());
        for (std::size_t i = 0; i < cw[mu].size(); ++i) {
            left[mu](i) = monomial(cw[mu][i], e.r, true);
            right[mu](i) = monomial(cw[mu][i], e.s, false);
        }
    }
    Eigen::MatrixXcd a(k, k);
    for (std::size_t mu = 0; mu < k; ++mu) {
        for (std::size_t nu = 0; nu < k; ++nu) {
            Complex sum = 0.0;
            const auto &o = overlaps_[mu][nu];
            for (Eigen::Index i = 0; i < o.rows(); ++i) {
                for (Eigen::Index j = 0; j < o.cols(); ++j) {
                    sum += left[mu](i) * o(i, j) * right[nu](j);
                }
            }
            a(mu, nu) = sum / std::sqrt(norms_[mu] * norms_[nu]);
        }
    }
    return a;
}

Eigen::MatrixXcd KLEvaluator::dephasing_matrix(std::size_t mode, int power) const {
    if (mode >= code_.modes()) {
        throw DimensionMismatch("dephasing mode out of range");
    }
    const std::size_t k = code_.num_codewords();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(k, k);
    if (power == 0) {
        return gram_;
    }
    for (int j = 1; j <= power; ++j) {
        MonomialError e = MonomialError::identity(code_.modes());
        e.r[mode] = e.s[mode] = j;
        a += static_cast<double>(stirling2(power, j)) * kl_matrix(e);
    }
    return a;
}

Eigen::MatrixXcd KLEvaluator::orthonormalize(const Eigen::MatrixXcd &a) const {
    return gram_inv_sqrt_ * a * gram_inv_sqrt_;
}

Eigen::MatrixXcd kl_matrix(const QSCode &code, const MonomialError &e) {
    return KLEvaluator(code).kl_matrix(e);
}

std::string ErrorRow::name() const {
    if (dephasing) {
        std::string sub = error.r.size() > 1 ? std::to_string(mode + 1) : "";
        return "n" + sub + (power > 1 ? "^" + std::to_string(power) : "");
    }
    return error.to_string();
}

DetectionReport detection_report(const QSCode &code, int max_degree, const DetectionOptions &options) {
    if (max_degree < 0) {
        throw InvariantViolation("detection_report: max_degree must be nonnegative");
    }
    if (options.include_dephasing_to < 0 || options.include_dephasing_to > 20) {
        throw InvariantViolation("detection_report: dephasing powers are supported up to 20");
    }
    const std::size_t n = code.modes();
    auto indices = graded_indices(2 * n, max_degree, options.enumeration_budget);

    DetectionReport report;
    report.max_degree = max_degree;
    report.tol = options.tol;
    for (const auto &e : indices) {
        ErrorRow row;
        row.error = {MultiIndex(e.begin(), e.begin() + n), MultiIndex(e.begin() + n, e.end())};
        report.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 1; k <= options.include_dephasing_to; ++k) {
            ErrorRow row;
            row.error = MonomialError::identity(n);
            row.dephasing = true;
            row.mode = i;
            row.power = k;
            report.rows.push_back(std::move(row));
        }
    }

    KLEvaluator kl(code);
    const double kdim = static_cast<double>(code.num_codewords());
    parallel_for(report.rows.size(), [&](std::size_t idx) {
        auto &row = report.rows[idx];
        row.raw = row.dephasing ? kl.dephasing_matrix(row.mode, row.power) : kl.kl_matrix(row.error);
        row.orthonormal = kl.orthonormalize(row.raw);
        row.lambda = row.orthonormal.trace() / kdim;
        Eigen::MatrixXcd dev = row.orthonormal;
        dev.diagonal().array() -= row.lambda;
        row.deviation = dev.cwiseAbs().maxCoeff();
        row.pass = row.deviation <= options.tol;
    });

    report.detection_degree = max_degree;
    report.dephasing_order = options.include_dephasing_to;
    for (const auto &row : report.rows) {
        if (row.pass) {
            continue;
        }
        if (row.dephasing) {
            report.dephasing_order = std::min(report.dephasing_order, row.power - 1);
        } else {
            report.detection_degree = std::min(report.detection_degree, row.error.degree() - 1);
        }
    }
    return report;
}

}  // namespace qsc
