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

#include "qsc/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsc/error.hpp"

namespace qsc {

Point::Point(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw InvariantViolation("a point needs at least one mode");
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvariantViolation("point amplitudes must be finite");
        }
    }
}

double Point::norm_sq() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

Constellation::Constellation(std::string label, std::vector<Point> points)
    : label_(std::move(label)), points_(std::move(points)) {
    if (points_.empty()) {
        throw InvariantViolation("constellation '" + label_ + "' is empty");
    }
    for (const auto &p : points_) {
        if (p.modes() != points_.front().modes()) {
            throw DimensionMismatch("constellation '" + label_ + "' mixes mode counts");
        }
    }
}

QSCode::QSCode(std::size_t modes, double radius_sq, std::vector<Constellation> codewords)
    : modes_(modes), radius_sq_(radius_sq), codewords_(std::move(codewords)) {
    if (modes_ == 0) {
        throw InvariantViolation("a code needs at least one mode");
    }
    if (codewords_.empty()) {
        throw InvariantViolation("a code needs at least one codeword");
    }
    if (!std::isfinite(radius_sq_) || radius_sq_ < 0) {
        throw InvariantViolation("radius_sq must be finite and nonnegative");
    }
    for (const auto &c : codewords_) {
        if (c.modes() != modes_) {
            throw DimensionMismatch("codeword '" + c.label() + "' has " + std::to_string(c.modes()) +
                                    " modes, code has " + std::to_string(modes_));
        }
    }
}

std::size_t QSCode::total_points() const {
    std::size_t n = 0;
    for (const auto &c : codewords_) {
        n += c.size();
    }
    return n;
}

PassiveUnitary::PassiveUnitary(Eigen::MatrixXcd matrix, double tol_unitary) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        throw DimensionMismatch("passive unitary must be a nonempty square matrix");
    }
    Eigen::MatrixXcd defect = matrix_.adjoint() * matrix_ - Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols());
    double worst = defect.cwiseAbs().maxCoeff();
    if (!(worst <= tol_unitary)) {
        throw NotUnitary("matrix is not unitary: max |U^dag U - I| = " + std::to_string(worst));
    }
}

PassiveUnitary PassiveUnitary::identity(std::size_t modes) {
    return phase_rotation(std::vector<double>(modes, 0.0));
}

PassiveUnitary PassiveUnitary::phase_rotation(std::vector<double> thetas) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(thetas.size(), thetas.size());
    for (std::size_t j = 0; j < thetas.size(); ++j) {
        m(j, j) = std::polar(1.0, thetas[j]);
    }
    PassiveUnitary u(std::move(m));
    u.phases_ = std::move(thetas);
    return u;
}

Point PassiveUnitary::apply(const Point &p) const {
    if (p.modes() != modes()) {
        throw DimensionMismatch("unitary acts on " + std::to_string(modes()) + " modes, point has " +
                                std::to_string(p.modes()));
    }
    std::vector<Complex> out(p.modes(), Complex(0.0));
    for (std::size_t i = 0; i < p.modes(); ++i) {
        for (std::size_t j = 0; j < p.modes(); ++j) {
            out[i] += matrix_(i, j) * p[j];
        }
    }
    return Point(std::move(out));
}

PassiveUnitary PassiveUnitary::operator*(const PassiveUnitary &rhs) const {
    if (rhs.modes() != modes()) {
        throw DimensionMismatch("cannot compose unitaries of different sizes");
    }
    if (phases_ && rhs.phases_) {
        std::vector<double> sum(*phases_);
        for (std::size_t j = 0; j < sum.size(); ++j) {
            sum[j] += (*rhs.phases_)[j];
        }
        return phase_rotation(std::move(sum));
    }
    return PassiveUnitary(matrix_ * rhs.matrix_, 1e-10);
}

const char *violation_kind_name(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::ModeMismatch:
            return "mode-mismatch";
        case Violation::Kind::OffSphere:
            return "off-sphere";
        case Violation::Kind::DuplicatePoint:
            return "duplicate-point";
        case Violation::Kind::SharedPoint:
            return "shared-point";
        case Violation::Kind::NonFinite:
            return "non-finite";
    }
    return "unknown";
}

std::vector<Violation> validate_code(const QSCode &code, double tol_sphere, double tol_point) {
    std::vector<Violation> out;
    const auto &cw = code.codewords();
    for (std::size_t mu = 0; mu < cw.size(); ++mu) {
        for (std::size_t i = 0; i < cw[mu].size(); ++i) {
            double residual = cw[mu][i].norm_sq() - code.radius_sq();
            if (std::abs(residual) > tol_sphere) {
                Violation v{Violation::Kind::OffSphere, mu, mu, {i}, residual, {}};
                v.message = "codeword '" + cw[mu].label() + "' point " + std::to_string(i) +
                            " has ||z||^2 - E = " + std::to_string(residual);
                out.push_back(std::move(v));
            }
        }
        for (std::size_t i = 0; i < cw[mu].size(); ++i) {
            for (std::size_t j = i + 1; j < cw[mu].size(); ++j) {
                double d = chordal_distance(cw[mu][i], cw[mu][j]);
                if (d <= tol_point) {
                    Violation v{Violation::Kind::DuplicatePoint, mu, mu, {i, j}, d, {}};
                    v.message = "codeword '" + cw[mu].label() + "' repeats a point at indices " + std::to_string(i) +
                                " and " + std::to_string(j);
                    out.push_back(std::move(v));
                }
            }
        }
    }
    for (std::size_t mu = 0; mu < cw.size(); ++mu) {
        for (std::size_t nu = mu + 1; nu < cw.size(); ++nu) {
            for (std::size_t i = 0; i < cw[mu].size(); ++i) {
                for (std::size_t j = 0; j < cw[nu].size(); ++j) {
                    double d = chordal_distance(cw[mu][i], cw[nu][j]);
                    if (d <= tol_point) {
                        Violation v{Violation::Kind::SharedPoint, mu, nu, {i, j}, d, {}};
                        v.message = "codewords '" + cw[mu].label() + "' and '" + cw[nu].label() +
                                    "' share a point (indices " + std::to_string(i) + ", " + std::to_string(j) + ")";
                        out.push_back(std::move(v));
                    }
                }
            }
        }
    }
    return out;
}

void require_valid(const QSCode &code, const Tolerances &tol) {
    auto violations = validate_code(code, tol.sphere, tol.point);
    if (violations.empty()) {
        return;
    }
    std::string msg = "invalid code:";
    for (const auto &v : violations) {
        msg += "\n  [";
        msg += violation_kind_name(v.kind);
        msg += "] " + v.message;
    }
    throw InvariantViolation(msg);
}

double chordal_distance(const Point &p, const Point &q) {
    if (p.modes() != q.modes()) {
        throw DimensionMismatch("chordal_distance: points have " + std::to_string(p.modes()) + " and " +
                                std::to_string(q.modes()) + " modes");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.modes(); ++i) {
        s += std::norm(p[i] - q[i]);
    }
    return std::sqrt(s);
}

Separation min_separation(const QSCode &code) {
    if (code.num_codewords() < 2) {
        throw InvariantViolation("min_separation needs at least two codewords");
    }
    const auto &cw = code.codewords();
    Separation best{std::numeric_limits<double>::infinity(), {}, {}};
    for (std::size_t mu = 0; mu < cw.size(); ++mu) {
        for (std::size_t nu = mu + 1; nu < cw.size(); ++nu) {
            for (std::size_t i = 0; i < cw[mu].size(); ++i) {
                for (std::size_t j = 0; j < cw[nu].size(); ++j) {
                    double d = chordal_distance(cw[mu][i], cw[nu][j]);
                    // Strict comparison keeps the first pair in (mu, nu, i, j) order.
                    if (d < best.distance) {
                        best = {d, {mu, i}, {nu, j}};
                    }
                }
            }
        }
    }
    return best;
}

Constellation orbit(const Point &seed, std::span<const PassiveUnitary> generators, std::size_t max_size,
                    const Tolerances &tol, std::string label) {
    if (max_size < 1) {
        throw InvariantViolation("orbit: max_size must be at least 1");
    }
    for (const auto &g : generators) {
        if (g.modes() != seed.modes()) {
            throw DimensionMismatch("orbit: generator size does not match seed");
        }
        Eigen::MatrixXcd defect =
            g.matrix().adjoint() * g.matrix() - Eigen::MatrixXcd::Identity(g.modes(), g.modes());
        if (defect.cwiseAbs().maxCoeff() > tol.unitary) {
            throw NotUnitary("orbit: generator is not unitary");
        }
    }
    std::vector<Point> found{seed};
    std::deque<std::size_t> frontier{0};
    double seed_norm = seed.norm_sq();
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (const auto &g : generators) {
            Point image = g.apply(found[cur]);
            bool known = std::any_of(found.begin(), found.end(),
                                     [&](const Point &p) { return chordal_distance(p, image) <= tol.point; });
            if (known) {
                continue;
            }
            if (std::abs(image.norm_sq() - seed_norm) > tol.sphere) {
                throw NumericalError("orbit: generator moved a point off the seed's sphere");
            }
            if (found.size() == max_size) {
                throw OrbitOverflow("orbit closure exceeds max_size = " + std::to_string(max_size));
            }
            found.push_back(std::move(image));
            frontier.push_back(found.size() - 1);
        }
    }
    return Constellation(std::move(label), std::move(found));
}

namespace {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_string(const std::string &s) {
    return nlohmann::json(s).dump();
}

std::pair<std::size_t, std::size_t> line_column(const std::string &text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

double read_number(const nlohmann::json &j, const std::string &where) {
    if (!j.is_number()) {
        throw ParseError(where + ": expected a number", 0, 0);
    }
    return j.get<double>();
}

}  // namespace

std::string code_to_json(const QSCode &code) {
    std::ostringstream out;
    out << "{\n  \"modes\": " << code.modes() << ",\n  \"radius_sq\": " << format_g17(code.radius_sq())
        << ",\n  \"codewords\": [";
    const auto &cw = code.codewords();
    for (std::size_t mu = 0; mu < cw.size(); ++mu) {
        out << (mu ? "," : "") << "\n    {\n      \"label\": " << json_string(cw[mu].label())
            << ",\n      \"points\": [";
        for (std::size_t i = 0; i < cw[mu].size(); ++i) {
            out << (i ? "," : "") << "\n        [";
            const auto &p = cw[mu][i];
            for (std::size_t k = 0; k < p.modes(); ++k) {
                out << (k ? ", " : "") << "[" << format_g17(p[k].real()) << ", " << format_g17(p[k].imag()) << "]";
            }
            out << "]";
        }
        out << "\n      ]\n    }";
    }
    out << "\n  ]\n}\n";
    return out.str();
}

QSCode code_from_json(const std::string &text, const Tolerances &tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
    }
    if (!doc.is_object()) {
        throw ParseError("code document must be a JSON object", 1, 1);
    }
    for (const char *key : {"modes", "radius_sq", "codewords"}) {
        if (!doc.contains(key)) {
            throw ParseError(std::string("missing required key \"") + key + "\"", 0, 0);
        }
    }
    if (!doc["modes"].is_number_unsigned() || doc["modes"].get<std::size_t>() == 0) {
        throw ParseError("\"modes\" must be a positive integer", 0, 0);
    }
    auto modes = doc["modes"].get<std::size_t>();
    double radius_sq = read_number(doc["radius_sq"], "\"radius_sq\"");
    if (!doc["codewords"].is_array()) {
        throw ParseError("\"codewords\" must be an array", 0, 0);
    }
    std::vector<Constellation> codewords;
    std::size_t mu = 0;
    for (const auto &c : doc["codewords"]) {
        std::string where = "codeword " + std::to_string(mu);
        if (!c.is_object() || !c.contains("points") || !c["points"].is_array()) {
            throw ParseError(where + ": expected an object with a \"points\" array", 0, 0);
        }
        std::string label = c.contains("label") && c["label"].is_string() ? c["label"].get<std::string>()
                                                                          : std::to_string(mu);
        std::vector<Point> points;
        for (const auto &p : c["points"]) {
            if (!p.is_array() || p.size() != modes) {
                throw ParseError(where + ": each point needs " + std::to_string(modes) + " [re, im] entries", 0, 0);
            }
            std::vector<Complex> amps;
            for (const auto &z : p) {
                if (!z.is_array() || z.size() != 2) {
                    throw ParseError(where + ": complex entries are [re, im] pairs", 0, 0);
                }
                amps.emplace_back(read_number(z[0], where), read_number(z[1], where));
            }
            points.emplace_back(std::move(amps));
        }
        if (points.empty()) {
            throw ParseError(where + ": constellation has no points", 0, 0);
        }
        codewords.emplace_back(std::move(label), std::move(points));
        ++mu;
    }
    if (codewords.empty()) {
        throw ParseError("\"codewords\" is empty", 0, 0);
    }
    QSCode code(modes, radius_sq, std::move(codewords));
    require_valid(code, tol);
    return code;
}

QSCode read_code_file(const std::string &path, const Tolerances &tol) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return code_from_json(text, tol);
}

void write_code_file(const QSCode &code, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << code_to_json(code);
}

}  // namespace qsc
