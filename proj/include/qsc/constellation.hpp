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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qsc {

using Complex = std::complex<double>;

/// Tolerances shared by the geometric checks.
struct Tolerances {
    double sphere = 1e-9;   ///< allowed | ||z||^2 - E |
    double point = 1e-9;    ///< two points closer than this coincide
    double unitary = 1e-12; ///< allowed max-entry | U^dag U - I |
};

/// Coherent amplitude vector z in C^n.
class Point {
   public:
    explicit Point(std::vector<Complex> amplitudes);
    Point(std::initializer_list<Complex> amplitudes) : Point(std::vector<Complex>(amplitudes)) {
    }

    std::size_t modes() const {
        return amps_.size();
    }
    const std::vector<Complex> &amplitudes() const {
        return amps_;
    }
    Complex operator[](std::size_t i) const {
        return amps_[i];
    }
    double norm_sq() const;

    bool operator==(const Point &other) const = default;

   private:
    std::vector<Complex> amps_;
};

/// The point set of one logical codeword. Construction checks structure only
/// (nonempty, uniform mode count); geometric invariants are checked by
/// validate_code so that invalid inputs can still be diagnosed.
class Constellation {
   public:
    Constellation(std::string label, std::vector<Point> points);

    const std::string &label() const {
        return label_;
    }
    const std::vector<Point> &points() const {
        return points_;
    }
    std::size_t size() const {
        return points_.size();
    }
    std::size_t modes() const {
        return points_.front().modes();
    }
    const Point &operator[](std::size_t i) const {
        return points_[i];
    }

    bool operator==(const Constellation &other) const = default;

   private:
    std::string label_;
    std::vector<Point> points_;
};

/// K labeled constellations on the sphere ||z||^2 = radius_sq in C^modes.
class QSCode {
   public:
    QSCode(std::size_t modes, double radius_sq, std::vector<Constellation> codewords);

    std::size_t modes() const {
        return modes_;
    }
    double radius_sq() const {
        return radius_sq_;
    }
    std::size_t num_codewords() const {
        return codewords_.size();
    }
    const std::vector<Constellation> &codewords() const {
        return codewords_;
    }
    const Constellation &operator[](std::size_t mu) const {
        return codewords_[mu];
    }
    std::size_t total_points() const;

    bool operator==(const QSCode &other) const = default;

   private:
    std::size_t modes_;
    double radius_sq_;
    std::vector<Constellation> codewords_;
};

/// Linear-optical transformation z -> U z. Per-mode phases are kept when the
/// unitary was built as exp(i sum_j theta_j n_j).
class PassiveUnitary {
   public:
    explicit PassiveUnitary(Eigen::MatrixXcd matrix, double tol_unitary = 1e-12);

    static PassiveUnitary identity(std::size_t modes);
    static PassiveUnitary phase_rotation(std::vector<double> thetas);

    std::size_t modes() const {
        return static_cast<std::size_t>(matrix_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    const std::optional<std::vector<double>> &per_mode_phases() const {
        return phases_;
    }

    Point apply(const Point &p) const;
    PassiveUnitary operator*(const PassiveUnitary &rhs) const;

   private:
    Eigen::MatrixXcd matrix_;
    std::optional<std::vector<double>> phases_;
};

/// One concrete invariant failure found by validate_code.
struct Violation {
    enum class Kind { ModeMismatch, OffSphere, DuplicatePoint, SharedPoint, NonFinite };
    Kind kind;
    std::size_t codeword = 0;
    std::size_t other_codeword = 0;
    std::vector<std::size_t> points;
    double residual = 0.0;
    std::string message;
};

const char *violation_kind_name(Violation::Kind kind);

std::vector<Violation> validate_code(const QSCode &code, double tol_sphere = 1e-9, double tol_point = 1e-9);

/// Throws InvariantViolation listing every violation, if any.
void require_valid(const QSCode &code, const Tolerances &tol = {});

/// Reference to one point: codewords()[codeword][index].
struct PointRef {
    std::size_t codeword = 0;
    std::size_t index = 0;
    bool operator==(const PointRef &other) const = default;
};

double chordal_distance(const Point &p, const Point &q);

struct Separation {
    double distance = 0.0;
    PointRef first;
    PointRef second;
};

/// Minimum distance between points of distinct codewords; ties go to the
/// lexicographically smallest (mu, nu, i, j).
Separation min_separation(const QSCode &code);

/// Closure of `seed` under `generators`, in breadth-first discovery order.
Constellation orbit(const Point &seed, std::span<const PassiveUnitary> generators, std::size_t max_size,
                    const Tolerances &tol = {}, std::string label = "orbit");

/// JSON interchange. Complex numbers are [re, im] with 17 significant digits.
std::string code_to_json(const QSCode &code);
QSCode code_from_json(const std::string &text, const Tolerances &tol = {});

QSCode read_code_file(const std::string &path, const Tolerances &tol = {});
void write_code_file(const QSCode &code, const std::string &path);

}  // namespace qsc
