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

#include "qsc/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsc/error.hpp"

namespace qsc {

namespace {

struct Layout {
    int cutoff;
    std::size_t modes;
    std::size_t dim;
    std::vector<std::size_t> stride;

    int level(std::size_t x, std::size_t mode) const {
        return static_cast<int>((x / stride[mode]) % static_cast<std::size_t>(cutoff));
    }
};

Layout layout_for(const QSCode &code, const FockConfig &cfg) {
    if (cfg.cutoff < 2) {
        throw InvariantViolation("Fock cutoff must be at least 2");
    }
    if (cfg.modes != code.modes()) {
        throw DimensionMismatch("Fock config has " + std::to_string(cfg.modes) + " modes, code has " +
                                std::to_string(code.modes()));
    }
    if (code.modes() > kMaxFockModes) {
        throw BudgetExceeded("the Fock oracle supports at most 2 modes");
    }
    Layout l{cfg.cutoff, code.modes(), 1, std::vector<std::size_t>(code.modes())};
    for (std::size_t i = code.modes(); i > 0; --i) {
        l.stride[i - 1] = l.dim;
        l.dim *= static_cast<std::size_t>(cfg.cutoff);
        if (l.dim > cfg.max_dimension) {
            throw BudgetExceeded("truncated Hilbert space dimension exceeds budget " +
                                 std::to_string(cfg.max_dimension));
        }
    }
    return l;
}

// out[x - shift*stride] += coeff[level] * in[x] on one mode.
template <typename Coeff>
Eigen::VectorXcd apply_mode_op(const Layout &l, const Eigen::VectorXcd &in, std::size_t mode, int shift,
                               const std::vector<Coeff> &coeff) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    const std::size_t step = static_cast<std::size_t>(shift) * l.stride[mode];
    for (std::size_t x = 0; x < l.dim; ++x) {
        int m = l.level(x, mode);
        if (m >= shift) {
            out[x - step] += coeff[m] * in[x];
        }
    }
    return out;
}

Eigen::VectorXcd lower(const Layout &l, const Eigen::VectorXcd &v, std::size_t mode, int power) {
    if (power == 0) {
        return v;
    }
    // a^power |m> = sqrt(m!/(m-power)!) |m-power>
    std::vector<double> coeff(l.cutoff, 0.0);
    for (int m = power; m < l.cutoff; ++m) {
        double c = 1.0;
        for (int t = 0; t < power; ++t) {
            c *= std::sqrt(static_cast<double>(m - t));
        }
        coeff[m] = c;
    }
    return apply_mode_op(l, v, mode, power, coeff);
}

// One mode's Kraus operator E|m> = coeff[m] |m - shift>.
struct ModeKraus {
    int shift = 0;
    std::vector<Complex> coeff;
};

void check_completeness(const std::vector<ModeKraus> &kraus, int cutoff, const char *channel) {
    for (int m = 0; m < cutoff; ++m) {
        double s = 0.0;
        for (const auto &k : kraus) {
            s += std::norm(k.coeff[m]);
        }
        if (std::abs(s - 1.0) > 1e-8) {
            throw NumericalError(std::string(channel) + " Kraus set is incomplete at photon number " +
                                 std::to_string(m) + ": sum E^dag E = " + std::to_string(s));
        }
    }
}

std::vector<ModeKraus> loss_kraus(double gamma, int cutoff) {
    std::vector<ModeKraus> out;
    if (gamma == 0.0) {
        out.push_back({0, std::vector<Complex>(cutoff, 1.0)});
        return out;
    }
    const double eta = 1.0 - gamma;
    for (int k = 0; k < cutoff; ++k) {
        ModeKraus e{k, std::vector<Complex>(cutoff, 0.0)};
        double norm = 0.0;
        for (int m = k; m < cutoff; ++m) {
            // C(m,k) gamma^k eta^(m-k)
            double log_p = std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) + k * std::log(gamma) +
                           (m - k) * std::log(eta);
            double c = std::exp(0.5 * log_p);
            e.coeff[m] = c;
            norm = std::max(norm, c);
        }
        if (norm < 1e-12 && k > gamma * (cutoff - 1)) {
            break;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ModeKraus> dephasing_kraus(double sigma, int cutoff, int nodes) {
    if (sigma == 0.0) {
        return {{0, std::vector<Complex>(cutoff, 1.0)}};
    }
    std::vector<double> x;
    std::vector<double> w;
    gauss_hermite(nodes, x, w);
    Eigen::MatrixXcd q(cutoff, nodes);
    for (int j = 0; j < nodes; ++j) {
        double theta = std::sqrt(2.0) * sigma * x[j];
        double amp = std::sqrt(w[j] / std::sqrt(std::numbers::pi));
        for (int m = 0; m < cutoff; ++m) {
            q(m, j) = std::polar(amp, theta * m);
        }
    }
    // Diagonal Kraus sets with equal q q^dag define the same channel; keep the
    // eigenvectors of q q^dag above 1e-15 relative weight.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(q * q.adjoint());
    const auto &vals = eig.eigenvalues();
    double top = vals.maxCoeff();
    std::vector<ModeKraus> out;
    for (Eigen::Index l = vals.size() - 1; l >= 0; --l) {
        if (vals(l) <= 1e-15 * top) {
            continue;
        }
        ModeKraus e{0, std::vector<Complex>(cutoff)};
        for (int m = 0; m < cutoff; ++m) {
            e.coeff[m] = std::sqrt(vals(l)) * eig.eigenvectors()(m, l);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// Applies every product of per-mode Kraus operators to the columns of v.
std::vector<Eigen::MatrixXcd> map_code(const Layout &l, const Eigen::MatrixXcd &v,
                                       const std::vector<ModeKraus> &kraus) {
    std::vector<Eigen::MatrixXcd> current{v};
    for (std::size_t mode = 0; mode < l.modes; ++mode) {
        std::vector<Eigen::MatrixXcd> next;
        next.reserve(current.size() * kraus.size());
        for (const auto &b : current) {
            for (const auto &k : kraus) {
                Eigen::MatrixXcd out(b.rows(), b.cols());
                for (Eigen::Index c = 0; c < b.cols(); ++c) {
                    out.col(c) = apply_mode_op(l, b.col(c), mode, k.shift, k.coeff);
                }
                next.push_back(std::move(out));
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace

double poisson_tail(double mean, int cutoff) {
    if (mean <= 0.0) {
        return cutoff > 0 ? 0.0 : 1.0;
    }
    double sum = 0.0;
    for (int k = cutoff; k < cutoff + 10000; ++k) {
        double term = std::exp(-mean + k * std::log(mean) - std::lgamma(k + 1.0));
        sum += term;
        if (k > mean && term < 1e-30 * std::max(sum, 1e-300)) {
            break;
        }
    }
    return sum;
}

Eigen::VectorXcd coherent_state(const Point &z, const FockConfig &cfg) {
    if (z.modes() != cfg.modes) {
        throw DimensionMismatch("coherent_state: point and config mode counts differ");
    }
    QSCode single(z.modes(), z.norm_sq(), {Constellation("z", {z})});
    Layout l = layout_for(single, cfg);
    std::vector<std::vector<Complex>> per_mode(z.modes(), std::vector<Complex>(cfg.cutoff));
    for (std::size_t i = 0; i < z.modes(); ++i) {
        double tail = poisson_tail(std::norm(z[i]), cfg.cutoff);
        if (tail > cfg.max_tail) {
            throw NumericalError("coherent amplitude " + std::to_string(std::abs(z[i])) + " leaks " +
                                 std::to_string(tail) + " probability above the Fock cutoff " +
                                 std::to_string(cfg.cutoff));
        }
        per_mode[i][0] = std::exp(-0.5 * std::norm(z[i]));
        for (int k = 1; k < cfg.cutoff; ++k) {
            per_mode[i][k] = per_mode[i][k - 1] * z[i] / std::sqrt(static_cast<double>(k));
        }
    }
    Eigen::VectorXcd v(l.dim);
    for (std::size_t x = 0; x < l.dim; ++x) {
        Complex a = 1.0;
        for (std::size_t i = 0; i < z.modes(); ++i) {
            a *= per_mode[i][l.level(x, i)];
        }
        v[x] = a;
    }
    return v;
}

std::vector<Eigen::VectorXcd> embed_codewords(const QSCode &code, const FockConfig &cfg) {
    Layout l = layout_for(code, cfg);
    std::vector<Eigen::VectorXcd> out;
    for (const auto &c : code.codewords()) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(l.dim);
        for (const auto &p : c.points()) {
            v += coherent_state(p, cfg);
        }
        double norm = v.norm();
        if (!(norm > 1e-12)) {
            throw NumericalError("embedded codeword '" + c.label() + "' has vanishing norm");
        }
        out.push_back(v / norm);
    }
    return out;
}

Eigen::MatrixXcd kl_matrix_fock(const QSCode &code, const MonomialError &e, const FockConfig &cfg) {
    if (e.r.size() != code.modes() || e.s.size() != code.modes()) {
        throw DimensionMismatch("kl_matrix_fock: error and code mode counts differ");
    }
    if (e.degree() > 6) {
        throw BudgetExceeded("kl_matrix_fock supports monomials of degree <= 6");
    }
    Layout l = layout_for(code, cfg);
    auto words = embed_codewords(code, cfg);
    std::vector<Eigen::VectorXcd> left;
    std::vector<Eigen::VectorXcd> right;
    for (const auto &w : words) {
        Eigen::VectorXcd a = w;
        Eigen::VectorXcd b = w;
        for (std::size_t i = 0; i < code.modes(); ++i) {
            a = lower(l, a, i, e.r[i]);
            b = lower(l, b, i, e.s[i]);
        }
        left.push_back(std::move(a));
        right.push_back(std::move(b));
    }
    const auto k = static_cast<Eigen::Index>(words.size());
    Eigen::MatrixXcd m(k, k);
    for (Eigen::Index mu = 0; mu < k; ++mu) {
        for (Eigen::Index nu = 0; nu < k; ++nu) {
            m(mu, nu) = left[mu].dot(right[nu]);
        }
    }
    return m;
}

Eigen::MatrixXcd orthonormal_code_basis(const QSCode &code, const FockConfig &cfg) {
    auto words = embed_codewords(code, cfg);
    Eigen::MatrixXcd c(words.front().size(), static_cast<Eigen::Index>(words.size()));
    for (std::size_t mu = 0; mu < words.size(); ++mu) {
        c.col(static_cast<Eigen::Index>(mu)) = words[mu];
    }
    Eigen::MatrixXcd gram = c.adjoint() * c;
    Eigen::MatrixXcd off = gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
    if (off.cwiseAbs().maxCoeff() <= 1e-12) {
        return c;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
    if (!(eig.eigenvalues().minCoeff() > 1e-12)) {
        throw NumericalError("embedded codewords are numerically linearly dependent");
    }
    return c * eig.operatorInverseSqrt();
}

double transpose_channel_fidelity(std::span<const Eigen::MatrixXcd> mapped) {
    if (mapped.empty()) {
        throw InvariantViolation("transpose_channel_fidelity needs at least one Kraus operator");
    }
    const Eigen::Index d = mapped.front().rows();
    const Eigen::Index k = mapped.front().cols();
    const auto l = static_cast<Eigen::Index>(mapped.size());
    Eigen::MatrixXcd stacked(d, l * k);
    for (Eigen::Index b = 0; b < l; ++b) {
        stacked.middleCols(b * k, k) = mapped[b];
    }
    // F = K^-2 sum_{k,l} |tr(B_l^dag N^{-1/2} B_k)|^2 with N = sum B B^dag; the
    // middle factor equals block (l, k) of (M^dag M)^{1/2}, M = [B_0 ... B_{L-1}].
    // Taken from the SVD of M: square roots of M^dag M's eigenvalues would turn
    // rounding noise in its null space into errors of order sqrt(eps).
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinV);
    const Eigen::MatrixXcd &w = svd.matrixV();
    Eigen::MatrixXcd root = w * svd.singularValues().asDiagonal() * w.adjoint();
    double sum = 0.0;
    for (Eigen::Index a = 0; a < l; ++a) {
        for (Eigen::Index b = 0; b < l; ++b) {
            sum += std::norm(root.block(a * k, b * k, k, k).trace());
        }
    }
    return sum / static_cast<double>(k * k);
}

double loss_channel_fidelity(const QSCode &code, double gamma, const FockConfig &cfg) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw InvariantViolation("loss rate gamma must lie in [0, 1)");
    }
    if (code.num_codewords() < 2) {
        throw InvariantViolation("channel fidelity needs at least two codewords");
    }
    Layout l = layout_for(code, cfg);
    auto kraus = loss_kraus(gamma, cfg.cutoff);
    check_completeness(kraus, cfg.cutoff, "loss");
    Eigen::MatrixXcd v = orthonormal_code_basis(code, cfg);
    auto mapped = map_code(l, v, kraus);
    return transpose_channel_fidelity(mapped);
}

double dephasing_channel_fidelity(const QSCode &code, double sigma, const FockConfig &cfg,
                                  const DephasingOptions &options) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw InvariantViolation("dephasing width sigma must be finite and nonnegative");
    }
    if (code.num_codewords() < 2) {
        throw InvariantViolation("channel fidelity needs at least two codewords");
    }
    if (options.nodes < 1) {
        throw InvariantViolation("Gauss-Hermite node count must be positive");
    }
    Layout l = layout_for(code, cfg);
    Eigen::MatrixXcd v = orthonormal_code_basis(code, cfg);
    auto run = [&](int nodes) {
        auto kraus = dephasing_kraus(sigma, cfg.cutoff, nodes);
        check_completeness(kraus, cfg.cutoff, "dephasing");
        auto mapped = map_code(l, v, kraus);
        return transpose_channel_fidelity(mapped);
    };
    double f = run(options.nodes);
    if (options.check_convergence && sigma > 0.0) {
        double refined = run(2 * options.nodes);
        if (std::abs(refined - f) > options.convergence_tol) {
            throw NumericalError("dephasing quadrature not converged: " + std::to_string(options.nodes) + " vs " +
                                 std::to_string(2 * options.nodes) + " nodes differ by " +
                                 std::to_string(std::abs(refined - f)));
        }
        return refined;
    }
    return f;
}

void gauss_hermite(int nodes, std::vector<double> &x, std::vector<double> &w) {
    if (nodes < 1) {
        throw InvariantViolation("gauss_hermite: nodes must be positive");
    }
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(nodes, nodes);
    for (int k = 1; k < nodes; ++k) {
        jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
    x.assign(nodes, 0.0);
    w.assign(nodes, 0.0);
    for (int j = 0; j < nodes; ++j) {
        x[j] = eig.eigenvalues()(j);
        double v0 = eig.eigenvectors()(0, j);
        w[j] = std::sqrt(std::numbers::pi) * v0 * v0;
    }
}

}  // namespace qsc
