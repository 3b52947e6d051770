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

#include "qsc/table.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <locale>
#include <set>
#include <sstream>

#include "qsc/kl.hpp"
#include "qsc/moments.hpp"
#include "qsc/symmetry.hpp"

namespace qsc {

std::string format_number(double v) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(12) << v;
    return s.str();
}

TableRow table_row(const std::string &label, const QSCode &code, const TableOptions &options) {
    TableRow row;
    row.code = label;
    row.modes = code.modes();
    row.num_codewords = code.num_codewords();
    row.points_per_codeword = code[0].size();
    if (code.num_codewords() >= 2) {
        // Reported on the unit sphere so the column is energy independent.
        row.min_separation = min_separation(code).distance / std::sqrt(code.radius_sq());
    }
    DesignReport design = design_strength(code, options.t_max);
    row.t_sphere = design.sphere_strength;
    row.t_match = design.matching_strength;
    DetectionOptions kl;
    kl.tol = options.kl_tol;
    row.detection_degree = detection_report(code, options.max_degree, kl).detection_degree;
    std::set<int> degrees;
    for (const auto &g : vanishing_ideal(code, options.ideal_degree)) {
        degrees.insert(g.degree());
    }
    row.jump_degrees.assign(degrees.begin(), degrees.end());
    return row;
}

std::vector<TableRow> catalog_table(const TableOptions &options) {
    std::vector<TableRow> rows;
    for (const auto &e : list_catalog()) {
        rows.push_back(table_row(entry_label(e.name, e.options), build(e.name, options.energy, e.options), options));
    }
    return rows;
}

namespace {

std::string join_degrees(const std::vector<int> &d, const char *sep) {
    if (d.empty()) {
        return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        out += (i ? sep : "") + std::to_string(d[i]);
    }
    return out;
}

std::vector<std::string> cells(const TableRow &r) {
    return {r.code,
            std::to_string(r.modes),
            std::to_string(r.num_codewords),
            std::to_string(r.points_per_codeword),
            r.num_codewords >= 2 ? format_number(r.min_separation) : "-",
            std::to_string(r.t_sphere),
            std::to_string(r.t_match),
            std::to_string(r.detection_degree),
            join_degrees(r.jump_degrees, ";")};
}

const std::vector<std::string> kHeader{"code", "modes", "K", "points_per_codeword", "min_separation",
                                       "t_sphere", "t_match", "detection_degree", "jump_degrees"};

}  // namespace

std::string table_csv(const std::vector<TableRow> &rows) {
    std::string out;
    auto emit = [&](const std::vector<std::string> &fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            bool quote = fields[i].find(',') != std::string::npos;
            out += (i ? "," : "") + (quote ? "\"" + fields[i] + "\"" : fields[i]);
        }
        out += "\n";
    };
    emit(kHeader);
    for (const auto &r : rows) {
        emit(cells(r));
    }
    return out;
}

std::string table_markdown(const std::vector<TableRow> &rows) {
    std::string out = "|";
    for (const auto &h : kHeader) {
        out += " " + h + " |";
    }
    out += "\n|";
    for (std::size_t i = 0; i < kHeader.size(); ++i) {
        out += " --- |";
    }
    out += "\n";
    for (const auto &r : rows) {
        out += "|";
        for (const auto &c : cells(r)) {
            out += " " + c + " |";
        }
        out += "\n";
    }
    return out;
}

}  // namespace qsc
