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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qsc/catalog.hpp"
#include "qsc/constellation.hpp"
#include "qsc/error.hpp"
#include "test_util.hpp"

namespace qsc {
namespace {

using testing::random_point;
using testing::random_unitary;

TEST(Point, RejectsEmptyAndNonFinite) {
    EXPECT_THROW(Point(std::vector<Complex>{}), InvariantViolation);
    EXPECT_THROW(Point({Complex(std::nan(""), 0.0)}), InvariantViolation);
    EXPECT_THROW(Point({Complex(0.0, INFINITY)}), InvariantViolation);
    EXPECT_DOUBLE_EQ(Point({Complex(3, 0), Complex(0, 4)}).norm_sq(), 25.0);
}

TEST(QSCode, StructuralChecks) {
    Constellation one("a", {Point({1.0})});
    Constellation two("b", {Point({1.0, 0.0})});
    EXPECT_THROW(QSCode(1, 1.0, {}), InvariantViolation);
    EXPECT_THROW(QSCode(1, 1.0, {one, two}), DimensionMismatch);
    EXPECT_THROW(Constellation("mixed", {Point({1.0}), Point({1.0, 0.0})}), DimensionMismatch);
    EXPECT_THROW(QSCode(1, -1.0, {one}), InvariantViolation);
}

TEST(Validate, ReportsEachViolationKind) {
    QSCode ok = testing::single_mode_code(1.0, {{1.0, -1.0}, {Complex(0, 1), Complex(0, -1)}});
    EXPECT_TRUE(validate_code(ok).empty());

    QSCode off = testing::single_mode_code(1.0, {{1.0, 1.1}});
    auto v = validate_code(off);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, Violation::Kind::OffSphere);
    EXPECT_EQ(v[0].points, std::vector<std::size_t>{1});
    EXPECT_NEAR(v[0].residual, 0.21, 1e-12);

    QSCode dup = testing::single_mode_code(1.0, {{1.0, 1.0 + 1e-12}});
    v = validate_code(dup);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, Violation::Kind::DuplicatePoint);

    QSCode shared = testing::single_mode_code(1.0, {{1.0, -1.0}, {-1.0}});
    v = validate_code(shared);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, Violation::Kind::SharedPoint);
    EXPECT_EQ(v[0].codeword, 0u);
    EXPECT_EQ(v[0].other_codeword, 1u);
    EXPECT_THROW(require_valid(shared), InvariantViolation);
}

TEST(Validate, ToleranceBoundary) {
    double r = 1.0 + 0.25e-9;  // |r^2 - 1| = 5e-10
    QSCode near = testing::single_mode_code(1.0, {{r}});
    EXPECT_TRUE(validate_code(near).empty());
    EXPECT_FALSE(validate_code(near, 1e-10).empty());
}

TEST(Distance, TriangleInequalityOnRandomTriples) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto a = random_point(rng, n, 2.0), b = random_point(rng, n, 2.0), c = random_point(rng, n, 2.0);
        double ab = chordal_distance(a, b), bc = chordal_distance(b, c), ac = chordal_distance(a, c);
        EXPECT_LE(ac, ab + bc + 1e-12);
        EXPECT_NEAR(chordal_distance(a, b), chordal_distance(b, a), 0.0);
        EXPECT_EQ(chordal_distance(a, a), 0.0);
    }
    EXPECT_THROW(chordal_distance(Point({1.0}), Point({1.0, 0.0})), DimensionMismatch);
}

TEST(PassiveUnitary, IsAnIsometry) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto u = random_unitary(rng, n);
        auto p = random_point(rng, n, 1.7), q = random_point(rng, n, 1.7);
        EXPECT_NEAR(chordal_distance(u.apply(p), u.apply(q)), chordal_distance(p, q), 1e-12);
    }
}

TEST(PassiveUnitary, RejectsNonUnitaryAndComposes) {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, 0.1, 0.0, 1.0;
    EXPECT_THROW(PassiveUnitary{m}, NotUnitary);
    EXPECT_THROW(PassiveUnitary{Eigen::MatrixXcd(2, 3)}, DimensionMismatch);

    auto a = PassiveUnitary::phase_rotation({0.3, 1.1});
    auto b = PassiveUnitary::phase_rotation({0.2, -0.4});
    Point p({Complex(1, 2), Complex(-0.5, 0.25)});
    Point composed = (a * b).apply(p);
    Point sequential = a.apply(b.apply(p));
    EXPECT_LT(chordal_distance(composed, sequential), 1e-14);
    EXPECT_THROW(a * PassiveUnitary::identity(3), DimensionMismatch);
    EXPECT_THROW(a.apply(Point({1.0})), DimensionMismatch);
}

TEST(MinSeparation, CatAndTieBreak) {
    QSCode cat = build("cat", 1.0, testing::cat_options(2, 2));
    auto s = min_separation(cat);
    EXPECT_NEAR(s.distance, std::sqrt(2.0), 1e-12);
    // Lexicographically first achieving pair.
    EXPECT_EQ(s.first, (PointRef{0, 0}));
    EXPECT_EQ(s.second, (PointRef{1, 0}));
}

TEST(Orbit, PolytopesAreClosedUnderTheirGenerators) {
    for (auto [name, size] : {std::pair{"cell24", 24u}, std::pair{"cell600", 120u}}) {
        auto gens = polytope_generators(name);
        Constellation c = orbit(Point({1.0, 0.0}), gens, 1000);
        EXPECT_EQ(c.size(), size) << name;
        for (const auto &g : gens) {
            for (const auto &p : c.points()) {
                Point img = g.apply(p);
                double best = INFINITY;
                for (const auto &q : c.points()) {
                    best = std::min(best, chordal_distance(img, q));
                }
                EXPECT_LT(best, 1e-9);
            }
        }
        EXPECT_THROW(orbit(Point({1.0, 0.0}), gens, size - 1), OrbitOverflow);
    }
}

TEST(Json, RoundTripIsExactForCatalogCodes) {
    for (const auto &e : list_catalog()) {
        for (double energy : {1.0, 4.0, 2.0 / 3.0}) {
            QSCode code = build(e.name, energy, e.options);
            QSCode back = code_from_json(code_to_json(code));
            EXPECT_EQ(back, code) << e.name;
        }
    }
}

TEST(Json, ParseErrorsCarryPosition) {
    try {
        code_from_json("{\n  \"modes\": 1,\n  oops\n}");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GE(e.column(), 1u);
    }
    EXPECT_THROW(code_from_json("{\"modes\": 1}"), ParseError);
}

TEST(Json, InvalidCodesAreRejectedOnLoad) {
    QSCode shared = testing::single_mode_code(1.0, {{1.0, -1.0}, {-1.0}});
    EXPECT_THROW(code_from_json(code_to_json(shared)), InvariantViolation);
}

}  // namespace
}  // namespace qsc
