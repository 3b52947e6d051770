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

#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsc/catalog.hpp"
#include "qsc/constellation.hpp"

namespace qsc::testing {

inline std::string fixture(const std::string &name) {
    return std::string(QSC_FIXTURE_DIR) + "/" + name;
}

inline Point random_point(std::mt19937_64 &rng, std::size_t modes, double radius = 1.0) {
    std::normal_distribution<double> g;
    std::vector<Complex> z(modes);
    double n = 0.0;
    for (auto &x : z) {
        x = Complex(g(rng), g(rng));
        n += std::norm(x);
    }
    for (auto &x : z) {
        x *= radius / std::sqrt(n);
    }
    return Point(z);
}

// Haar-ish unitary from the QR of a Gaussian matrix, phases fixed.
inline PassiveUnitary random_unitary(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR();
    for (std::size_t j = 0; j < n; ++j) {
        q.col(j) *= r(j, j) / std::abs(r(j, j));
    }
    // Re-orthonormalize to push the unitary residual well under 1e-12.
    Eigen::HouseholderQR<Eigen::MatrixXcd> again(q);
    Eigen::MatrixXcd q2 = again.householderQ();
    Eigen::MatrixXcd r2 = again.matrixQR();
    for (std::size_t j = 0; j < n; ++j) {
        q2.col(j) *= r2(j, j) / std::abs(r2(j, j));
    }
    return PassiveUnitary(q2);
}

inline BuildOptions cat_options(int S, int K) {
    BuildOptions o;
    o.S = S;
    o.K = K;
    return o;
}

inline BuildOptions catalog_options(const std::string &name) {
    for (const auto &e : list_catalog()) {
        if (e.name == name) return e.options;
    }
    return {};
}

inline QSCode transform(const QSCode &code, const PassiveUnitary &u) {
    std::vector<Constellation> cws;
    for (const auto &c : code.codewords()) {
        std::vector<Point> pts;
        for (const auto &p : c.points()) {
            pts.push_back(u.apply(p));
        }
        cws.emplace_back(c.label(), pts);
    }
    return QSCode(code.modes(), code.radius_sq(), cws);
}

// All points of a code as a single constellation.
inline QSCode merged(const QSCode &code) {
    std::vector<Point> pts;
    for (const auto &c : code.codewords()) {
        pts.insert(pts.end(), c.points().begin(), c.points().end());
    }
    return QSCode(code.modes(), code.radius_sq(), {Constellation("all", pts)});
}

inline QSCode single_mode_code(double radius_sq, const std::vector<std::vector<Complex>> &codewords) {
    std::vector<Constellation> cws;
    for (std::size_t mu = 0; mu < codewords.size(); ++mu) {
        std::vector<Point> pts;
        for (auto z : codewords[mu]) {
            pts.emplace_back(std::vector<Complex>{z});
        }
        cws.emplace_back("c" + std::to_string(mu), pts);
    }
    return QSCode(1, radius_sq, cws);
}

}  // namespace qsc::testing
