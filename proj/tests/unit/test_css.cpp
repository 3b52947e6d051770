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
#include <set>

#include "qsc/css.hpp"
#include "qsc/error.hpp"
#include "qsc/symmetry.hpp"
#include "test_util.hpp"

namespace qsc {
namespace {

ClassicalCodeSpec make(int q, std::size_t n, GeneratorMatrix gx, GeneratorMatrix gz) {
    ClassicalCodeSpec s;
    s.q = q;
    s.length = n;
    s.gen_x = std::move(gx);
    s.gen_z = std::move(gz);
    return s;
}

// Brute-force reference sets, independent of the library's linear algebra.
std::set<Word> span_of(const GeneratorMatrix &rows, std::size_t n, int q) {
    std::set<Word> out{Word(n, 0)};
    for (const auto &r : rows) {
        std::set<Word> next;
        for (const auto &w : out) {
            for (int c = 0; c < q; ++c) {
                Word v = w;
                for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + c * r[i]) % q;
                next.insert(v);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::set<Word> orthogonal_of(const GeneratorMatrix &rows, std::size_t n, int q) {
    std::set<Word> out;
    Word w(n, 0);
    while (true) {
        bool ok = true;
        for (const auto &r : rows) {
            int dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += w[i] * r[i];
            ok = ok && dot % q == 0;
        }
        if (ok) out.insert(w);
        std::size_t i = 0;
        while (i < n && ++w[i] == q) w[i++] = 0;
        if (i == n) break;
    }
    return out;
}

Word string_of(const Point &p, Complex alpha, int q) {
    Word w;
    for (auto z : p.amplitudes()) {
        double ang = std::arg(z / alpha);
        int k = static_cast<int>(std::lround(ang * q / (2 * std::numbers::pi)));
        w.push_back(((k % q) + q) % q);
    }
    return w;
}

ClassicalCodeSpec random_css(std::mt19937_64 &rng, int q, std::size_t n) {
    std::uniform_int_distribution<int> sym(0, q - 1);
    std::uniform_int_distribution<int> count(0, static_cast<int>(n) - 1);
    GeneratorMatrix gx;
    for (int r = count(rng); r > 0; --r) {
        Word w(n);
        for (auto &x : w) x = sym(rng);
        gx.push_back(w);
    }
    // gen_Z rows drawn from the orthogonal complement of C_X.
    auto perp = orthogonal_of(gx, n, q);
    std::vector<Word> pool(perp.begin(), perp.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    GeneratorMatrix gz;
    for (int r = count(rng); r > 0; --r) gz.push_back(pool[pick(rng)]);
    return make(q, n, gx, gz);
}

TEST(Css, RepetitionExample) {
    Complex a = 1.5;
    auto c = compile_css(make(2, 2, {{1, 1}}, {}), a);
    ASSERT_EQ(c.code.num_codewords(), 2u);
    std::set<Word> c0, c1;
    for (const auto &p : c.code[0].points()) c0.insert(string_of(p, a, 2));
    for (const auto &p : c.code[1].points()) c1.insert(string_of(p, a, 2));
    EXPECT_EQ(c0, (std::set<Word>{{0, 0}, {1, 1}}));
    EXPECT_EQ(c1, (std::set<Word>{{0, 1}, {1, 0}}));
    EXPECT_EQ(c.representatives[0], (Word{0, 0}));
    EXPECT_EQ(c.representatives[1], (Word{0, 1}));  // (weight, lex) order: 01 before 10
    EXPECT_NEAR(c.code.radius_sq(), 2 * 2.25, 1e-15);
    EXPECT_TRUE(validate_code(c.code).empty());
}

TEST(Css, SingleModeIsTheTwoLeggedCat) {
    auto c = compile_css(make(2, 1, {}, {}), 2.0);
    ASSERT_EQ(c.code.num_codewords(), 2u);
    EXPECT_NEAR(std::abs(c.code[0][0][0] - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.code[1][0][0] + 2.0), 0.0, 1e-15);
    auto p = css_properties(make(2, 1, {}, {}), 2.0);
    EXPECT_EQ(p.distance_x, 1);
    ASSERT_TRUE(p.min_separation.has_value());
    EXPECT_NEAR(*p.min_separation, 4.0, 1e-12);
    EXPECT_EQ(p.detection_degree, 0);
}

TEST(Css, FourModeDualContainingPair) {
    auto spec = make(2, 4, {{1, 1, 1, 1}}, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto p = css_properties(spec, 1.0);
    EXPECT_EQ(p.size_cx, 2u);
    EXPECT_EQ(p.size_cz_perp, 4u);
    EXPECT_EQ(p.num_codewords, 2u);
    EXPECT_EQ(p.distance_x, 2);
    EXPECT_EQ(p.distance_z, 2);
    EXPECT_NEAR(*p.min_separation, 2 * std::sqrt(2.0), 1e-12);
    EXPECT_EQ(p.detection_degree, 1);
    auto r = css_properties(make(2, 2, {{1, 1}}, {}), 2.0);
    EXPECT_EQ(r.distance_x, 1);
    EXPECT_EQ(r.distance_z, 2);
    EXPECT_NEAR(*r.min_separation, 4.0, 1e-12);
}

TEST(Css, Validation) {
    EXPECT_THROW(check_css(make(4, 1, {}, {{1}})), InvariantViolation);
    EXPECT_THROW(check_css(make(2, 2, {{1, 0}}, {{1, 1}})), InvariantViolation);
    EXPECT_THROW(check_css(make(3, 2, {{1, 3}}, {})), InvariantViolation);
    EXPECT_THROW(check_css(make(2, 2, {{1, 0, 1}}, {})), DimensionMismatch);
    EXPECT_THROW(check_css(make(2, 0, {}, {})), InvariantViolation);
    EXPECT_NO_THROW(check_css(make(3, 3, {{1, 1, 1}}, {{1, 2, 0}})));
    EXPECT_THROW(compile_css(make(2, 1, {}, {}), 0.0), InvariantViolation);
    EXPECT_THROW(compile_css(make(2, 21, {}, {}), 1.0), BudgetExceeded);
}

TEST(Css, LinearAlgebraHelpers) {
    EXPECT_EQ(rank_mod_q({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 2), 2u);
    EXPECT_EQ(rank_mod_q({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3), 3u);
    auto k = kernel({{1, 1, 1}}, 3, 2);
    EXPECT_EQ(k.size(), 4u);
    EXPECT_EQ(k.front(), (Word{0, 0, 0}));
    EXPECT_EQ(weight(k.back()), 2);
    EXPECT_EQ(row_space({{1, 2}}, 2, 3).size(), 3u);
}

TEST(Css, ParseMatrix) {
    auto m = parse_matrix("# header\n1 0 1\n\n  0 1 1  \n");
    EXPECT_EQ(m, (GeneratorMatrix{{1, 0, 1}, {0, 1, 1}}));
    EXPECT_TRUE(parse_matrix("").empty());
    try {
        parse_matrix("1 0\n1 x\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        parse_matrix("1 0\n  1 1 zz");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.column(), 7u);
    }
    EXPECT_THROW(parse_matrix("1 0\n1\n"), ParseError);
}

TEST(Css, CountingIdentitiesOnRandomCodes) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        int q = trial % 2 ? 3 : 2;
        std::size_t n = 1 + trial % (q == 2 ? 6 : 5);
        auto spec = random_css(rng, q, n);
        Complex alpha(1.1, 0.3);
        auto c = compile_css(spec, alpha);
        auto cx = span_of(spec.gen_x, n, q);
        auto czp = orthogonal_of(spec.gen_z, n, q);
        EXPECT_TRUE(validate_code(c.code, 1e-9 * n).empty());
        EXPECT_EQ(c.code.num_codewords() * cx.size(), czp.size());
        std::set<Word> covered;
        for (std::size_t mu = 0; mu < c.code.num_codewords(); ++mu) {
            EXPECT_EQ(c.code[mu].size(), cx.size());
            std::set<Word> here;
            for (const auto &p : c.code[mu].points()) here.insert(string_of(p, alpha, q));
            // Each codeword is a coset: differences lie in C_X.
            Word base = *here.begin();
            for (const auto &w : here) {
                Word d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = (w[i] - base[i] + q) % q;
                EXPECT_TRUE(cx.count(d));
                EXPECT_TRUE(czp.count(w));
            }
            covered.insert(here.begin(), here.end());
        }
        EXPECT_EQ(covered, czp);
    }
}

TEST(Css, GenXRowRotationsAreZType) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int q = trial % 2 ? 3 : 2;
        std::size_t n = 2 + trial % 3;
        auto spec = random_css(rng, q, n);
        auto c = compile_css(spec, 1.0);
        for (const auto &row : spec.gen_x) {
            std::vector<double> th;
            for (int g : row) th.push_back(2 * std::numbers::pi * g / q);
            auto a = classify_symmetry(c.code, PassiveUnitary::phase_rotation(th));
            EXPECT_EQ(a.classification, SymmetryClass::ZType);
        }
    }
}

TEST(Css, EmptyGenXGivesProductOfCats) {
    for (int q : {2, 3}) {
        auto c = compile_css(make(q, 2, {}, {}), 1.0);
        EXPECT_EQ(c.code.num_codewords(), static_cast<std::size_t>(q * q));
        std::set<Word> all;
        for (const auto &cw : c.code.codewords()) {
            ASSERT_EQ(cw.size(), 1u);
            all.insert(string_of(cw[0], 1.0, q));
        }
        EXPECT_EQ(all.size(), static_cast<std::size_t>(q * q));
    }
}

}  // namespace
}  // namespace qsc
