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

#include "qsc/css.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "qsc/error.hpp"
#include "qsc/kl.hpp"

namespace qsc {

namespace {

constexpr std::size_t kMaxBruteForceLength = 20;

bool is_prime(int q) {
    if (q < 2) {
        return false;
    }
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

int mod(long long a, int q) {
    long long r = a % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
    // q prime: a^(q-2)
    long long r = 1;
    long long base = a;
    for (int e = q - 2; e > 0; e >>= 1) {
        if (e & 1) {
            r = r * base % q;
        }
        base = base * base % q;
    }
    return static_cast<int>(r);
}

bool weight_lex_less(const Word &a, const Word &b) {
    int wa = weight(a);
    int wb = weight(b);
    return wa != wb ? wa < wb : a < b;
}

// Reduced row echelon form over Z_q; returns nonzero rows.
GeneratorMatrix echelon(GeneratorMatrix rows, int q) {
    if (rows.empty()) {
        return rows;
    }
    const std::size_t n = rows.front().size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[lead], rows[pivot]);
        int inv = inverse_mod(rows[lead][col], q);
        for (auto &x : rows[lead]) {
            x = mod(static_cast<long long>(x) * inv, q);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) {
                continue;
            }
            int f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                rows[r][c] = mod(rows[r][c] - static_cast<long long>(f) * rows[lead][c], q);
            }
        }
        ++lead;
    }
    rows.resize(lead);
    return rows;
}

void check_brute_force(std::size_t length, int q) {
    if (length > kMaxBruteForceLength) {
        throw BudgetExceeded("code length " + std::to_string(length) + " exceeds the brute-force limit of 20");
    }
    if (std::pow(static_cast<double>(q), static_cast<double>(length)) > 1e8) {
        throw BudgetExceeded("q^n exceeds the brute-force enumeration budget of 1e8 strings");
    }
}

std::vector<Word> all_words(std::size_t length, int q) {
    check_brute_force(length, q);
    std::vector<Word> out;
    Word w(length, 0);
    while (true) {
        out.push_back(w);
        std::size_t j = length;
        while (j > 0 && ++w[j - 1] == q) {
            w[--j] = 0;
        }
        if (j == 0) {
            break;
        }
    }
    return out;
}

bool orthogonal(const Word &a, const Word &b, int q) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += static_cast<long long>(a[i]) * b[i];
    }
    return mod(s, q) == 0;
}

Word add(const Word &a, const Word &b, int q) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = (a[i] + b[i]) % q;
    }
    return out;
}

}  // namespace

int weight(const Word &w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x != 0; }));
}

void check_css(const ClassicalCodeSpec &spec) {
    if (!is_prime(spec.q)) {
        throw InvariantViolation("q = " + std::to_string(spec.q) + " is not prime; only prime moduli are supported");
    }
    if (spec.length == 0) {
        throw InvariantViolation("code length must be positive");
    }
    for (const auto *m : {&spec.gen_x, &spec.gen_z}) {
        for (const auto &row : *m) {
            if (row.size() != spec.length) {
                throw DimensionMismatch("generator row of length " + std::to_string(row.size()) + ", expected " +
                                        std::to_string(spec.length));
            }
            for (int x : row) {
                if (x < 0 || x >= spec.q) {
                    throw InvariantViolation("generator entries must lie in [0, q)");
                }
            }
        }
    }
    for (std::size_t a = 0; a < spec.gen_x.size(); ++a) {
        for (std::size_t b = 0; b < spec.gen_z.size(); ++b) {
            if (!orthogonal(spec.gen_x[a], spec.gen_z[b], spec.q)) {
                throw InvariantViolation("CSS condition violated: row " + std::to_string(a) + " of gen_x and row " +
                                         std::to_string(b) + " of gen_z are not orthogonal mod q");
            }
        }
    }
}

std::size_t rank_mod_q(const GeneratorMatrix &rows, int q) {
    return echelon(rows, q).size();
}

std::vector<Word> row_space(const GeneratorMatrix &rows, std::size_t length, int q) {
    auto basis = echelon(rows, q);
    check_brute_force(basis.size(), q);
    std::vector<Word> out;
    for (const auto &coeffs : all_words(basis.size(), q)) {
        Word w(length, 0);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            for (std::size_t c = 0; c < length; ++c) {
                w[c] = (w[c] + coeffs[r] * basis[r][c]) % q;
            }
        }
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), weight_lex_less);
    return out;
}

std::vector<Word> kernel(const GeneratorMatrix &rows, std::size_t length, int q) {
    std::vector<Word> out;
    for (auto &w : all_words(length, q)) {
        if (std::all_of(rows.begin(), rows.end(), [&](const Word &r) { return orthogonal(r, w, q); })) {
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end(), weight_lex_less);
    return out;
}

CompiledCss compile_css(const ClassicalCodeSpec &spec, Complex alpha) {
    check_css(spec);
    if (alpha == Complex(0.0)) {
        throw InvariantViolation("compile_css: alpha must be nonzero");
    }
    auto cx = row_space(spec.gen_x, spec.length, spec.q);
    auto cz_perp = kernel(spec.gen_z, spec.length, spec.q);

    std::set<Word> covered;
    std::vector<Word> representatives;
    std::vector<std::vector<Word>> strings;
    std::vector<Constellation> cws;
    for (const auto &x : cz_perp) {
        if (covered.count(x)) {
            continue;
        }
        std::vector<Word> coset;
        std::vector<Point> pts;
        for (const auto &c : cx) {
            Word b = add(x, c, spec.q);
            covered.insert(b);
            std::vector<Complex> amps(spec.length);
            for (std::size_t i = 0; i < spec.length; ++i) {
                amps[i] = alpha * std::polar(1.0, 2.0 * std::numbers::pi * b[i] / spec.q);
            }
            pts.emplace_back(std::move(amps));
            coset.push_back(std::move(b));
        }
        cws.emplace_back("L" + std::to_string(representatives.size()), std::move(pts));
        representatives.push_back(x);
        strings.push_back(std::move(coset));
    }
    double radius_sq = static_cast<double>(spec.length) * std::norm(alpha);
    QSCode code(spec.length, radius_sq, std::move(cws));
    require_valid(code, Tolerances{1e-9 * std::max(1.0, radius_sq), 1e-9, 1e-12});
    return {std::move(code), std::move(representatives), std::move(strings)};
}

CssProperties css_properties(const ClassicalCodeSpec &spec, Complex alpha, int max_degree, double tol,
                             int dephasing_to) {
    check_css(spec);
    auto cx = row_space(spec.gen_x, spec.length, spec.q);
    auto cz = row_space(spec.gen_z, spec.length, spec.q);
    auto cz_perp = kernel(spec.gen_z, spec.length, spec.q);
    auto cx_perp = kernel(spec.gen_x, spec.length, spec.q);
    std::set<Word> cx_set(cx.begin(), cx.end());
    std::set<Word> cz_set(cz.begin(), cz.end());

    CssProperties p;
    p.size_cx = cx.size();
    p.size_cz_perp = cz_perp.size();
    for (const auto &w : cz_perp) {
        if (!cx_set.count(w)) {
            p.distance_x = p.distance_x ? std::min(*p.distance_x, weight(w)) : weight(w);
        }
    }
    for (const auto &w : cx_perp) {
        if (!cz_set.count(w)) {
            p.distance_z = p.distance_z ? std::min(*p.distance_z, weight(w)) : weight(w);
        }
    }
    auto compiled = compile_css(spec, alpha);
    p.num_codewords = compiled.code.num_codewords();
    if (p.num_codewords >= 2) {
        p.min_separation = min_separation(compiled.code).distance;
    }
    DetectionOptions opts;
    opts.tol = tol;
    opts.include_dephasing_to = dephasing_to;
    auto report = detection_report(compiled.code, max_degree, opts);
    p.detection_degree = report.detection_degree;
    p.dephasing_order = report.dephasing_order;
    return p;
}

GeneratorMatrix parse_matrix(const std::string &text) {
    GeneratorMatrix rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        Word row;
        std::string tok;
        while (fields >> tok) {
            auto end = fields.eof() ? line.size() : static_cast<std::size_t>(fields.tellg());
            std::size_t col = end - tok.size() + 1;
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != tok.size()) {
                throw ParseError("matrix entry '" + tok + "' is not an integer", line_no, col);
            }
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("matrix rows have different lengths", line_no, 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

GeneratorMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

}  // namespace qsc
