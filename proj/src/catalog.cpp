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

#include "qsc/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qsc/error.hpp"
#include "qsc/moments.hpp"

namespace qsc {

namespace {

using Quaternion = std::array<double, 4>;  // a + b i + c j + d k

Quaternion qmul(const Quaternion &x, const Quaternion &y) {
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

bool qclose(const Quaternion &x, const Quaternion &y) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) {
        d += (x[i] - y[i]) * (x[i] - y[i]);
    }
    return d < 1e-20;
}

std::size_t qfind(const std::vector<Quaternion> &group, const Quaternion &x) {
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (qclose(group[i], x)) {
            return i;
        }
    }
    throw InvariantViolation("quaternion product left the vertex group");
}

// The 24 Hurwitz units: +-1, +-i, +-j, +-k, then (+-1 +-i +-j +-k)/2.
std::vector<Quaternion> hurwitz_units() {
    std::vector<Quaternion> out;
    for (int axis = 0; axis < 4; ++axis) {
        for (double s : {1.0, -1.0}) {
            Quaternion q{0, 0, 0, 0};
            q[axis] = s;
            out.push_back(q);
        }
    }
    for (int mask = 0; mask < 16; ++mask) {
        Quaternion q;
        for (int i = 0; i < 4; ++i) {
            q[i] = (mask >> (3 - i)) & 1 ? -0.5 : 0.5;
        }
        out.push_back(q);
    }
    return out;
}

// The 120 unit icosians: Hurwitz units plus even permutations of (+-phi, +-1, +-1/phi, 0)/2.
std::vector<Quaternion> icosians() {
    const double phi = std::numbers::phi;
    std::vector<Quaternion> out = hurwitz_units();
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                inversions += perm[i] > perm[j];
            }
        }
        if (inversions % 2) {
            continue;
        }
        for (int mask = 0; mask < 8; ++mask) {
            std::array<double, 4> base{(mask & 4 ? -phi : phi) / 2, (mask & 2 ? -1.0 : 1.0) / 2,
                                       (mask & 1 ? -1.0 / phi : 1.0 / phi) / 2, 0.0};
            Quaternion q;
            for (int i = 0; i < 4; ++i) {
                q[i] = base[perm[i]];
            }
            out.push_back(q);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Subgroup generated by `gens` inside `group`, in discovery order starting from 1.
std::vector<Quaternion> subgroup(const std::vector<Quaternion> &group, const std::vector<Quaternion> &gens) {
    std::vector<Quaternion> out{{1, 0, 0, 0}};
    for (std::size_t cur = 0; cur < out.size(); ++cur) {
        for (const auto &g : gens) {
            Quaternion x = qmul(out[cur], g);
            qfind(group, x);
            if (std::none_of(out.begin(), out.end(), [&](const Quaternion &y) { return qclose(x, y); })) {
                out.push_back(x);
            }
        }
    }
    return out;
}

// Left cosets g H, in order of first appearance of their representative in `group`.
std::vector<std::vector<Quaternion>> left_cosets(const std::vector<Quaternion> &group,
                                                 const std::vector<Quaternion> &sub) {
    std::vector<bool> assigned(group.size(), false);
    std::vector<std::vector<Quaternion>> out;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (assigned[i]) {
            continue;
        }
        std::vector<Quaternion> coset;
        for (const auto &h : sub) {
            Quaternion x = qmul(group[i], h);
            assigned[qfind(group, x)] = true;
            coset.push_back(x);
        }
        out.push_back(std::move(coset));
    }
    return out;
}

Point quaternion_point(const Quaternion &q, double scale) {
    return Point({Complex(q[0], q[1]) * scale, Complex(q[2], q[3]) * scale});
}

QSCode quaternion_code(const std::vector<std::vector<Quaternion>> &parts, double radius_sq, const std::string &stem) {
    double scale = std::sqrt(radius_sq);
    std::vector<Constellation> cws;
    for (std::size_t mu = 0; mu < parts.size(); ++mu) {
        std::vector<Point> pts;
        for (const auto &q : parts[mu]) {
            pts.push_back(quaternion_point(q, scale));
        }
        cws.emplace_back(stem + std::to_string(mu), std::move(pts));
    }
    return QSCode(2, radius_sq, std::move(cws));
}

Complex root_of_unity(int k, int m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * k / m);
}

void require(bool ok, const std::string &msg) {
    if (!ok) {
        throw InvariantViolation(msg);
    }
}

QSCode build_cat(double radius_sq, const BuildOptions &o) {
    require(o.S >= 1 && o.K >= 1, "cat: S and K must be positive");
    const int total = o.S * o.K;
    double alpha = std::sqrt(radius_sq);
    std::vector<Constellation> cws;
    for (int mu = 0; mu < o.K; ++mu) {
        std::vector<Point> pts;
        for (int k = mu; k < total; k += o.K) {
            pts.push_back(Point({alpha * root_of_unity(k, total)}));
        }
        cws.emplace_back("c" + std::to_string(mu), std::move(pts));
    }
    return QSCode(1, radius_sq, std::move(cws));
}

QSCode build_hypercube(double radius_sq, const BuildOptions &o) {
    require(o.n >= 1 && o.n <= 8, "hypercube: n must be in [1, 8]");
    const int dims = 2 * o.n;
    double scale = std::sqrt(radius_sq / dims);
    std::vector<std::vector<Point>> parts(2);
    for (int mask = 0; mask < (1 << dims); ++mask) {
        std::vector<Complex> amps(o.n);
        int minus = 0;
        for (int j = 0; j < o.n; ++j) {
            bool re_neg = (mask >> (dims - 1 - 2 * j)) & 1;
            bool im_neg = (mask >> (dims - 2 - 2 * j)) & 1;
            minus += re_neg + im_neg;
            amps[j] = Complex(re_neg ? -scale : scale, im_neg ? -scale : scale);
        }
        parts[minus % 2].push_back(Point(std::move(amps)));
    }
    return QSCode(o.n, radius_sq, {Constellation("even", parts[0]), Constellation("odd", parts[1])});
}

QSCode build_orthoplex(double radius_sq, const BuildOptions &o) {
    require(o.n >= 1, "orthoplex: n must be positive");
    double alpha = std::sqrt(radius_sq);
    std::vector<Point> real_axes;
    std::vector<Point> imag_axes;
    for (int j = 0; j < o.n; ++j) {
        for (double s : {1.0, -1.0}) {
            std::vector<Complex> re(o.n, 0.0);
            std::vector<Complex> im(o.n, 0.0);
            re[j] = Complex(s * alpha, 0.0);
            im[j] = Complex(0.0, s * alpha);
            real_axes.emplace_back(std::move(re));
            imag_axes.emplace_back(std::move(im));
        }
    }
    return QSCode(o.n, radius_sq, {Constellation("real", real_axes), Constellation("imag", imag_axes)});
}

QSCode build_cell24(double radius_sq, const BuildOptions &o) {
    auto group = hurwitz_units();
    const Quaternion i{0, 1, 0, 0};
    const Quaternion j{0, 0, 1, 0};
    const Quaternion omega{0.5, 0.5, 0.5, 0.5};
    std::string part = o.partition.empty() ? "16-cells" : o.partition;
    std::vector<Quaternion> sub;
    if (part == "16-cells") {
        sub = subgroup(group, {i, j});
    } else if (part == "hexagons") {
        sub = subgroup(group, {omega});
    } else if (part == "squares") {
        sub = subgroup(group, {i});
    } else {
        throw InvariantViolation("cell24: unknown partition '" + part + "' (16-cells, hexagons, squares)");
    }
    return quaternion_code(left_cosets(group, sub), radius_sq, "c");
}

QSCode build_cell600(double radius_sq, const BuildOptions &o) {
    auto group = icosians();
    const Quaternion i{0, 1, 0, 0};
    const Quaternion j{0, 0, 1, 0};
    const Quaternion omega{0.5, 0.5, 0.5, 0.5};
    std::string part = o.partition.empty() ? "24-cells" : o.partition;
    std::vector<Quaternion> sub;
    if (part == "24-cells") {
        sub = subgroup(group, {i, omega});
    } else if (part == "16-cells") {
        sub = subgroup(group, {i, j});
    } else {
        throw InvariantViolation("cell600: unknown partition '" + part + "' (24-cells, 16-cells)");
    }
    return quaternion_code(left_cosets(group, sub), radius_sq, "c");
}

QSCode build_complex_hypercube(double radius_sq, const BuildOptions &o) {
    require(o.n >= 1 && o.p >= 2 && o.K >= 1 && o.p % o.K == 0,
            "complex_hypercube: need n >= 1, p >= 2 and K dividing p");
    double scale = std::sqrt(radius_sq / o.n);
    std::vector<std::vector<Point>> parts(o.K);
    std::vector<int> b(o.n, 0);
    while (true) {
        std::vector<Complex> amps(o.n);
        int sum = 0;
        for (int t = 0; t < o.n; ++t) {
            amps[t] = scale * root_of_unity(b[t], o.p);
            sum += b[t];
        }
        parts[sum % o.K].push_back(Point(std::move(amps)));
        int t = o.n - 1;
        while (t >= 0 && ++b[t] == o.p) {
            b[t--] = 0;
        }
        if (t < 0) {
            break;
        }
    }
    std::vector<Constellation> cws;
    for (int mu = 0; mu < o.K; ++mu) {
        cws.emplace_back("c" + std::to_string(mu), std::move(parts[mu]));
    }
    return QSCode(o.n, radius_sq, std::move(cws));
}

QSCode build_complex_orthoplex(double radius_sq, const BuildOptions &o) {
    require(o.n >= 1 && o.p >= 2 && o.K >= 1 && o.p % o.K == 0,
            "complex_orthoplex: need n >= 1, p >= 2 and K dividing p");
    double alpha = std::sqrt(radius_sq);
    std::vector<std::vector<Point>> parts(o.K);
    for (int j = 0; j < o.n; ++j) {
        for (int k = 0; k < o.p; ++k) {
            std::vector<Complex> amps(o.n, 0.0);
            amps[j] = alpha * root_of_unity(k, o.p);
            parts[k % o.K].emplace_back(std::move(amps));
        }
    }
    std::vector<Constellation> cws;
    for (int mu = 0; mu < o.K; ++mu) {
        cws.emplace_back("c" + std::to_string(mu), std::move(parts[mu]));
    }
    return QSCode(o.n, radius_sq, std::move(cws));
}

// Hessian polyhedron 3{3}3{3}3: cyclic shifts of (0, w^a, -w^b), w = exp(2 pi i/3).
QSCode build_hessian(double radius_sq, const BuildOptions &o) {
    std::string part = o.partition.empty() ? "a-b" : o.partition;
    require(part == "a-b" || part == "a+b", "hessian: unknown partition '" + part + "' (a-b, a+b)");
    double scale = std::sqrt(radius_sq / 2.0);
    std::vector<std::vector<Point>> parts(3);
    for (int shift = 0; shift < 3; ++shift) {
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                std::array<Complex, 3> v{Complex(0.0), scale * root_of_unity(a, 3), -scale * root_of_unity(b, 3)};
                std::vector<Complex> amps(3);
                for (int t = 0; t < 3; ++t) {
                    amps[(t + shift) % 3] = v[t];
                }
                int label = part == "a-b" ? ((a - b) % 3 + 3) % 3 : (a + b) % 3;
                parts[label].emplace_back(std::move(amps));
            }
        }
    }
    return QSCode(3, radius_sq,
                  {Constellation("c0", parts[0]), Constellation("c1", parts[1]), Constellation("c2", parts[2])});
}

CatalogEntry make_entry(std::string name, std::string description, BuildOptions o, std::vector<std::string> parts) {
    QSCode c = build(name, 1.0, o);
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.modes = c.modes();
    e.num_points = c.total_points();
    e.num_codewords = c.num_codewords();
    e.options = std::move(o);
    e.partitions = std::move(parts);
    return e;
}

}  // namespace

QSCode build(const std::string &name, double radius_sq, const BuildOptions &options) {
    if (!(radius_sq > 0) || !std::isfinite(radius_sq)) {
        throw InvariantViolation("build: radius_sq must be positive and finite");
    }
    QSCode code = [&] {
        if (name == "cat") {
            return build_cat(radius_sq, options);
        }
        if (name == "hypercube") {
            return build_hypercube(radius_sq, options);
        }
        if (name == "orthoplex") {
            return build_orthoplex(radius_sq, options);
        }
        if (name == "cell24") {
            return build_cell24(radius_sq, options);
        }
        if (name == "cell600") {
            return build_cell600(radius_sq, options);
        }
        if (name == "complex_hypercube") {
            return build_complex_hypercube(radius_sq, options);
        }
        if (name == "complex_orthoplex") {
            return build_complex_orthoplex(radius_sq, options);
        }
        if (name == "hessian") {
            return build_hessian(radius_sq, options);
        }
        throw InvariantViolation("unknown catalog code '" + name + "'");
    }();
    require_valid(code, Tolerances{1e-9 * std::max(1.0, radius_sq), 1e-9, 1e-12});
    return code;
}

std::vector<CatalogEntry> list_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back(make_entry("cat", "single-mode cat code, S points per codeword, K codewords", {2, 2, 1, 3, ""}, {}));
    out.push_back(make_entry("hypercube", "hypercube vertices in R^{2n}, split by sign parity", {2, 2, 2, 3, ""}, {}));
    out.push_back(make_entry("orthoplex", "cross-polytope in R^{2n}, real vs imaginary axes", {2, 2, 2, 3, ""}, {}));
    out.push_back(
        make_entry("cell24", "24-cell as cosets of a Hurwitz subgroup", {2, 3, 2, 3, "16-cells"},
                   {"16-cells", "hexagons", "squares"}));
    out.push_back(make_entry("cell600", "600-cell as cosets of an icosian subgroup", {2, 5, 2, 3, "24-cells"},
                             {"24-cells", "16-cells"}));
    out.push_back(make_entry("complex_hypercube", "generalized complex hypercube, codeword = exponent sum mod K",
                             {2, 3, 2, 3, ""}, {}));
    out.push_back(make_entry("complex_orthoplex", "generalized complex cross-polytope, codeword = exponent mod K",
                             {2, 2, 2, 4, ""}, {}));
    out.push_back(make_entry("hessian", "Hessian polyhedron in C^3", {2, 3, 3, 3, "a-b"}, {"a-b", "a+b"}));
    return out;
}

CatalogEntry catalog_properties(CatalogEntry entry, int t_max) {
    QSCode code = build(entry.name, 1.0, entry.options);
    DesignReport d = design_strength(code, t_max);
    entry.expected_properties["t_sphere"] = d.sphere_strength;
    entry.expected_properties["t_match"] = d.matching_strength;
    if (code.num_codewords() >= 2) {
        entry.expected_properties["min_separation"] = min_separation(code).distance;
    }
    return entry;
}

std::vector<PassiveUnitary> polytope_generators(const std::string &name) {
    auto right_mult = [](const Quaternion &h) {
        Complex h1(h[0], h[1]);
        Complex h2(h[2], h[3]);
        Eigen::MatrixXcd m(2, 2);
        m << h1, -std::conj(h2), h2, std::conj(h1);
        return PassiveUnitary(m, 1e-12);
    };
    const Quaternion i{0, 1, 0, 0};
    const Quaternion omega{0.5, 0.5, 0.5, 0.5};
    if (name == "cell24") {
        return {right_mult(i), right_mult(omega)};
    }
    if (name == "cell600") {
        const double phi = std::numbers::phi;
        return {right_mult(i), right_mult(omega), right_mult({phi / 2, 0.5, 0.5 / phi, 0.0})};
    }
    throw InvariantViolation("no generator set for '" + name + "'");
}

std::string entry_label(const std::string &name, const BuildOptions &o) {
    if (name == "cat") {
        return "cat(S=" + std::to_string(o.S) + ",K=" + std::to_string(o.K) + ")";
    }
    if (name == "hypercube" || name == "orthoplex") {
        return name + "(n=" + std::to_string(o.n) + ")";
    }
    if (name == "complex_hypercube" || name == "complex_orthoplex") {
        return name + "(n=" + std::to_string(o.n) + ",p=" + std::to_string(o.p) + ",K=" + std::to_string(o.K) + ")";
    }
    if (!o.partition.empty()) {
        return name + "(" + o.partition + ")";
    }
    return name;
}

}  // namespace qsc
