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

#include <string>
#include <vector>

#include "qsc/catalog.hpp"

namespace qsc {

/// Summary of one catalog code; every field is measured, never typed in.
struct TableRow {
    std::string code;
    std::size_t modes = 0;
    std::size_t num_codewords = 0;
    std::size_t points_per_codeword = 0;
    double min_separation = 0.0;
    int t_sphere = 0;
    int t_match = 0;
    int detection_degree = -1;
    std::vector<int> jump_degrees; ///< distinct degrees of the vanishing-ideal generators
};

struct TableOptions {
    int t_max = 8;
    int max_degree = 3;
    double energy = 100.0;
    double kl_tol = 1e-6;
    int ideal_degree = 6;
};

TableRow table_row(const std::string &label, const QSCode &code, const TableOptions &options);

/// One row per catalog entry, in list_catalog() order.
std::vector<TableRow> catalog_table(const TableOptions &options);

std::string table_csv(const std::vector<TableRow> &rows);
std::string table_markdown(const std::vector<TableRow> &rows);

/// "%.12g" with a '.' decimal separator regardless of locale.
std::string format_number(double v);

}  // namespace qsc
