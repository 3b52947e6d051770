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

#include "qsc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <locale>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qsc/catalog.hpp"
#include "qsc/css.hpp"
#include "qsc/error.hpp"
#include "qsc/fock.hpp"
#include "qsc/kl.hpp"
#include "qsc/moments.hpp"
#include "qsc/symmetry.hpp"
#include "qsc/table.hpp"

namespace qsc::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
    return format_number(v);
}

json complex_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json matrix_json(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string exps(const MultiIndex &e) {
    std::string s;
    for (int x : e) {
        s += std::to_string(x);
    }
    return s;
}

void print_table(std::ostream &out, const std::vector<std::string> &header,
                 const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto &r : rows) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << "\n";
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) {
        rule.emplace_back(w, '-');
    }
    line(rule);
    for (const auto &r : rows) {
        line(r);
    }
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot write '" + path + "'");
    }
    f << text;
}

std::vector<double> parse_range(const std::string &spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string piece;
    while (std::getline(ss, piece, ':')) {
        parts.push_back(piece);
    }
    auto to_d = [](const std::string &s) {
        std::istringstream in(s);
        in.imbue(std::locale::classic());
        double v;
        if (!(in >> v) || !in.eof()) {
            throw CLI::ValidationError("range", "'" + s + "' is not a number");
        }
        return v;
    };
    if (parts.size() == 1) {
        return {to_d(parts[0])};
    }
    if (parts.size() != 3) {
        throw CLI::ValidationError("range", "expected start:stop:count, got '" + spec + "'");
    }
    double a = to_d(parts[0]);
    double b = to_d(parts[1]);
    int count = static_cast<int>(to_d(parts[2]));
    if (count < 1) {
        throw CLI::ValidationError("range", "count must be positive");
    }
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
    }
    return out;
}

struct Common {
    bool json = false;
};

// ---- catalog ---------------------------------------------------------------

int cmd_catalog(std::ostream &out, const Common &common, bool properties, int tmax) {
    auto entries = list_catalog();
    if (properties) {
        for (auto &e : entries) {
            e = catalog_properties(e, tmax);
        }
    }
    if (common.json) {
        json arr = json::array();
        for (const auto &e : entries) {
            json j{{"name", e.name},
                   {"label", entry_label(e.name, e.options)},
                   {"description", e.description},
                   {"modes", e.modes},
                   {"num_points", e.num_points},
                   {"num_codewords", e.num_codewords},
                   {"options",
                    {{"S", e.options.S}, {"K", e.options.K}, {"n", e.options.n}, {"p", e.options.p},
                     {"partition", e.options.partition}}},
                   {"partitions", e.partitions},
                   {"expected_properties", e.expected_properties}};
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto &e : entries) {
        std::string props;
        for (const auto &[k, v] : e.expected_properties) {
            props += (props.empty() ? "" : " ") + k + "=" + num(v);
        }
        std::string parts;
        for (const auto &p : e.partitions) {
            parts += (parts.empty() ? "" : ",") + p;
        }
        rows.push_back({e.name, entry_label(e.name, e.options), std::to_string(e.modes),
                        std::to_string(e.num_points), std::to_string(e.num_codewords), parts.empty() ? "-" : parts,
                        properties ? props : e.description});
    }
    print_table(out, {"name", "default", "modes", "points", "K", "partitions", properties ? "properties" : "description"},
                rows);
    return kExitOk;
}

// ---- design ----------------------------------------------------------------

int cmd_design(std::ostream &out, std::ostream &err, const Common &common, const std::string &in, int tmax, double tol,
               const std::string &csv, long long mc_samples, unsigned seed) {
    QSCode code = read_code_file(in);
    DesignOptions opts;
    opts.tol = tol;
    DesignReport r = design_strength(code, tmax, opts);

    json mc = json::array();
    if (mc_samples > 0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss;
        int mc_degree = std::min(tmax, 4);
        std::vector<MomentIndex> indices;
        for (int d = 0; d <= mc_degree; ++d) {
            auto block = moment_indices(code.modes(), d);
            indices.insert(indices.end(), block.begin(), block.end());
        }
        std::vector<Complex> sum(indices.size(), 0.0);
        std::vector<double> sum_sq(indices.size(), 0.0);
        std::vector<Complex> z(code.modes());
        err << "[design] Monte Carlo check with " << mc_samples << " samples\n";
        for (long long s = 0; s < mc_samples; ++s) {
            double norm = 0.0;
            for (auto &zi : z) {
                zi = Complex(gauss(rng), gauss(rng));
                norm += std::norm(zi);
            }
            norm = std::sqrt(norm);
            for (auto &zi : z) {
                zi /= norm;
            }
            for (std::size_t k = 0; k < indices.size(); ++k) {
                Complex v = 1.0;
                for (std::size_t i = 0; i < z.size(); ++i) {
                    v *= std::pow(z[i], indices[k].p[i]) * std::pow(std::conj(z[i]), indices[k].q[i]);
                }
                sum[k] += v;
                sum_sq[k] += std::norm(v);
            }
        }
        for (std::size_t k = 0; k < indices.size(); ++k) {
            double n = static_cast<double>(mc_samples);
            Complex mean = sum[k] / n;
            double var = std::max(0.0, sum_sq[k] / n - std::norm(mean));
            double se = std::sqrt(var / n);
            Complex exact = sphere_average(indices[k], code.modes());
            mc.push_back({{"p", indices[k].p},
                          {"q", indices[k].q},
                          {"closed_form", complex_json(exact)},
                          {"estimate", complex_json(mean)},
                          {"std_error", se},
                          {"z_score", se > 0 ? std::abs(mean - exact) / se : 0.0}});
        }
    }

    if (!csv.empty()) {
        std::string text = "degree,sphere_residual,match_residual\n";
        for (const auto &[d, res] : r.worst_residual_per_degree) {
            text += std::to_string(d) + "," + num(res) + "," + num(r.worst_match_residual_per_degree.at(d)) + "\n";
        }
        write_text(csv, text);
    }
    if (common.json) {
        json per = json::array();
        for (const auto &[d, res] : r.worst_residual_per_degree) {
            per.push_back({{"degree", d},
                           {"sphere_residual", res},
                           {"match_residual", r.worst_match_residual_per_degree.at(d)},
                           {"worst_index", {{"p", r.worst_index_per_degree.at(d).p}, {"q", r.worst_index_per_degree.at(d).q}}}});
        }
        json j{{"t_sphere", r.sphere_strength}, {"t_match", r.matching_strength}, {"tol", tol}, {"degrees", per}};
        if (mc_samples > 0) {
            j["monte_carlo"] = mc;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto &[d, res] : r.worst_residual_per_degree) {
        double m = r.worst_match_residual_per_degree.at(d);
        const auto &ix = r.worst_index_per_degree.at(d);
        rows.push_back({std::to_string(d), num(res), res <= tol ? "yes" : "no", num(m), m <= tol ? "yes" : "no",
                        "p=" + exps(ix.p) + " q=" + exps(ix.q)});
    }
    print_table(out, {"degree", "sphere_residual", "sphere_ok", "match_residual", "match_ok", "worst_index"}, rows);
    out << "t_sphere = " << r.sphere_strength << "\nt_match = " << r.matching_strength << "\n";
    if (mc_samples > 0) {
        double worst = 0.0;
        for (const auto &m : mc) {
            worst = std::max(worst, m["z_score"].get<double>());
        }
        out << "monte_carlo: " << mc.size() << " indices, max |estimate - closed form| / std_error = " << num(worst)
            << "\n";
    }
    return kExitOk;
}

// ---- kl --------------------------------------------------------------------

int cmd_kl(std::ostream &out, const Common &common, const std::string &in, int max_degree, int dephasing, double tol,
           const std::string &csv) {
    QSCode code = read_code_file(in);
    DetectionOptions opts;
    opts.tol = tol;
    opts.include_dephasing_to = dephasing;
    DetectionReport r = detection_report(code, max_degree, opts);

    auto row_cells = [&](const ErrorRow &row) {
        return std::vector<std::string>{row.name(),
                                        exps(row.error.r),
                                        exps(row.error.s),
                                        row.dephasing ? "-" : std::to_string(row.error.degree()),
                                        num(row.lambda.real()),
                                        num(row.lambda.imag()),
                                        num(row.deviation),
                                        row.pass ? "pass" : "fail"};
    };
    if (!csv.empty()) {
        std::string text = "error,r,s,degree,lambda_re,lambda_im,delta,result\n";
        for (const auto &row : r.rows) {
            auto c = row_cells(row);
            for (std::size_t i = 0; i < c.size(); ++i) {
                text += (i ? "," : "") + c[i];
            }
            text += "\n";
        }
        write_text(csv, text);
    }
    if (common.json) {
        json rows = json::array();
        for (const auto &row : r.rows) {
            rows.push_back({{"error", row.name()},
                            {"r", row.error.r},
                            {"s", row.error.s},
                            {"dephasing", row.dephasing},
                            {"lambda", complex_json(row.lambda)},
                            {"delta", row.deviation},
                            {"pass", row.pass},
                            {"kl_matrix", matrix_json(row.raw)},
                            {"kl_matrix_orthonormal", matrix_json(row.orthonormal)}});
        }
        out << json{{"modes", code.modes()},
                    {"K", code.num_codewords()},
                    {"radius_sq", code.radius_sq()},
                    {"tol", tol},
                    {"max_degree", max_degree},
                    {"detection_degree", r.detection_degree},
                    {"dephasing_order", r.dephasing_order},
                    {"errors", rows}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto &row : r.rows) {
        rows.push_back(row_cells(row));
    }
    print_table(out, {"error", "r", "s", "degree", "lambda_re", "lambda_im", "delta", "result"}, rows);
    out << "detection_degree = " << r.detection_degree << " (tol " << num(tol) << ")\n";
    if (dephasing > 0) {
        out << "dephasing_order = " << r.dephasing_order << "\n";
    }
    for (const auto &row : r.rows) {
        if (!row.dephasing && row.error.degree() == 1 && !row.pass && total_degree(row.error.s) == 1) {
            out << "loss error " << row.name() << " is not detected\n";
        }
    }
    return kExitOk;
}

// ---- symmetries ------------------------------------------------------------

std::string perm_string(const std::vector<std::size_t> &perm) {
    std::string s = "(";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        s += (i ? " " : "") + std::to_string(perm[i]);
    }
    return s + ")";
}

int cmd_symmetries(std::ostream &out, const Common &common, const std::string &in, int max_order, double tol) {
    QSCode code = read_code_file(in);
    PhaseSearchOptions opts;
    opts.tol = tol;
    auto found = enumerate_phase_symmetries(code, max_order, opts);
    if (common.json) {
        json arr = json::array();
        for (const auto &a : found) {
            arr.push_back({{"order", a.phase_order},
                           {"numerators", a.phase_numerators},
                           {"operator", a.describe()},
                           {"classification", symmetry_class_name(a.classification)},
                           {"codeword_permutation", a.codeword_permutation}});
        }
        out << json{{"max_order", max_order}, {"symmetries", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto &a : found) {
        rows.push_back({a.describe(), symmetry_class_name(a.classification), perm_string(a.codeword_permutation)});
    }
    print_table(out, {"rotation", "type", "codeword_permutation"}, rows);
    return kExitOk;
}

// ---- ideal -----------------------------------------------------------------

int cmd_ideal(std::ostream &out, const Common &common, const std::string &in, int max_degree, double tol) {
    QSCode code = read_code_file(in);
    IdealOptions opts;
    opts.tol_ideal = tol;
    auto ideal = vanishing_ideal(code, max_degree, opts);
    if (common.json) {
        json arr = json::array();
        for (const auto &g : ideal) {
            json terms = json::array();
            for (const auto &[d, c] : g.terms) {
                terms.push_back({{"exponent", d}, {"coefficient", complex_json(c)}});
            }
            arr.push_back({{"degree", g.degree()},
                           {"polynomial", g.to_string()},
                           {"terms", terms},
                           {"residual", verify_jump_annihilates(code, g)}});
        }
        out << json{{"max_degree", max_degree}, {"dimension", ideal.size()}, {"polynomials", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto &g : ideal) {
        rows.push_back({std::to_string(g.degree()), g.to_string(), num(verify_jump_annihilates(code, g))});
    }
    print_table(out, {"degree", "jump operator g(a)", "max |g(z)|"}, rows);
    out << "null space dimension = " << ideal.size() << "\n";
    return kExitOk;
}

// ---- css -------------------------------------------------------------------

int cmd_css(std::ostream &out, const Common &common, int q, const std::string &gx, const std::string &gz,
            std::size_t length, double alpha_re, double alpha_im, const std::string &out_path, bool properties) {
    ClassicalCodeSpec spec;
    spec.q = q;
    spec.gen_x = gx.empty() ? GeneratorMatrix{} : read_matrix_file(gx);
    spec.gen_z = gz.empty() ? GeneratorMatrix{} : read_matrix_file(gz);
    spec.length = length;
    for (const auto *m : {&spec.gen_x, &spec.gen_z}) {
        if (!m->empty()) {
            if (spec.length != 0 && spec.length != m->front().size()) {
                throw DimensionMismatch("--length disagrees with the generator matrices");
            }
            spec.length = m->front().size();
        }
    }
    if (spec.length == 0) {
        throw CLI::ValidationError("--length", "required when both generator matrices are empty");
    }
    Complex alpha(alpha_re, alpha_im);
    auto compiled = compile_css(spec, alpha);
    if (!out_path.empty()) {
        write_code_file(compiled.code, out_path);
    }
    std::optional<CssProperties> props;
    if (properties) {
        props = css_properties(spec, alpha);
    }
    if (common.json) {
        json reps = json::array();
        for (const auto &r : compiled.representatives) {
            reps.push_back(r);
        }
        json j{{"q", q},
               {"length", spec.length},
               {"K", compiled.code.num_codewords()},
               {"points_per_codeword", compiled.code[0].size()},
               {"radius_sq", compiled.code.radius_sq()},
               {"representatives", reps}};
        if (props) {
            j["properties"] = {{"size_cx", props->size_cx},
                               {"size_cz_perp", props->size_cz_perp},
                               {"distance_x", props->distance_x ? json(*props->distance_x) : json(nullptr)},
                               {"distance_z", props->distance_z ? json(*props->distance_z) : json(nullptr)},
                               {"min_separation", props->min_separation ? json(*props->min_separation) : json(nullptr)},
                               {"detection_degree", props->detection_degree},
                               {"dephasing_order", props->dephasing_order}};
        }
        if (out_path.empty()) {
            j["code"] = json::parse(code_to_json(compiled.code));
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    if (out_path.empty()) {
        out << code_to_json(compiled.code);
        return kExitOk;
    }
    out << "K = " << compiled.code.num_codewords() << ", points per codeword = " << compiled.code[0].size()
        << ", radius_sq = " << num(compiled.code.radius_sq()) << "\n";
    for (std::size_t mu = 0; mu < compiled.representatives.size(); ++mu) {
        out << "  " << compiled.code[mu].label() << ": representative " << exps(compiled.representatives[mu]) << "\n";
    }
    if (props) {
        auto opt = [](const std::optional<int> &v) { return v ? std::to_string(*v) : std::string("-"); };
        out << "|C_X| = " << props->size_cx << ", |C_Z^perp| = " << props->size_cz_perp << "\n"
            << "d_X = " << opt(props->distance_x) << ", d_Z = " << opt(props->distance_z) << "\n"
            << "min_separation = " << (props->min_separation ? num(*props->min_separation) : "-") << "\n"
            << "detection_degree = " << props->detection_degree << ", dephasing_order = " << props->dephasing_order
            << "\n";
    }
    return kExitOk;
}

// ---- perf ------------------------------------------------------------------

int cmd_perf(std::ostream &out, std::ostream &err, const Common &common, const std::string &in,
             const std::string &channel, const std::string &levels, int cutoff, int nodes, const std::string &csv) {
    QSCode code = read_code_file(in);
    auto cfg = FockConfig::for_code(code, cutoff);
    auto noise = parse_range(levels);
    std::vector<double> fid;
    for (std::size_t i = 0; i < noise.size(); ++i) {
        err << "[perf] " << channel << " " << num(noise[i]) << " (" << i + 1 << "/" << noise.size() << ")\n";
        if (channel == "loss") {
            fid.push_back(loss_channel_fidelity(code, noise[i], cfg));
        } else {
            DephasingOptions d;
            d.nodes = nodes;
            fid.push_back(dephasing_channel_fidelity(code, noise[i], cfg, d));
        }
    }
    if (!csv.empty()) {
        std::string text = "noise,fidelity,infidelity\n";
        for (std::size_t i = 0; i < noise.size(); ++i) {
            text += num(noise[i]) + "," + num(fid[i]) + "," + num(1.0 - fid[i]) + "\n";
        }
        write_text(csv, text);
    }
    if (common.json) {
        json rows = json::array();
        for (std::size_t i = 0; i < noise.size(); ++i) {
            rows.push_back({{"noise", noise[i]}, {"fidelity", fid[i]}});
        }
        out << json{{"channel", channel}, {"cutoff", cutoff}, {"points", rows}}.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < noise.size(); ++i) {
        rows.push_back({num(noise[i]), num(fid[i]), num(1.0 - fid[i])});
    }
    print_table(out, {channel == "loss" ? "gamma" : "sigma", "fidelity", "infidelity"}, rows);
    return kExitOk;
}

// ---- table -----------------------------------------------------------------

int cmd_table(std::ostream &out, std::ostream &err, const Common &common, const TableOptions &opts,
              const std::string &csv, bool markdown) {
    std::vector<TableRow> rows;
    auto entries = list_catalog();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        std::string label = entry_label(e.name, e.options);
        err << "[table] " << i + 1 << "/" << entries.size() << " " << label << "\n";
        rows.push_back(table_row(label, build(e.name, opts.energy, e.options), opts));
    }
    if (!csv.empty()) {
        write_text(csv, table_csv(rows));
    }
    if (common.json) {
        json arr = json::array();
        for (const auto &r : rows) {
            arr.push_back({{"code", r.code},
                           {"modes", r.modes},
                           {"K", r.num_codewords},
                           {"points_per_codeword", r.points_per_codeword},
                           {"min_separation", r.num_codewords >= 2 ? json(r.min_separation) : json(nullptr)},
                           {"t_sphere", r.t_sphere},
                           {"t_match", r.t_match},
                           {"detection_degree", r.detection_degree},
                           {"jump_degrees", r.jump_degrees}});
        }
        out << json{{"energy", opts.energy},
                    {"tmax", opts.t_max},
                    {"max_degree", opts.max_degree},
                    {"kl_tol", opts.kl_tol},
                    {"ideal_degree", opts.ideal_degree},
                    {"rows", arr}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << (markdown ? table_markdown(rows) : table_csv(rows));
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qsc: construct and verify quantum spherical codes"};
    app.name(args.empty() ? "qsc" : args.front());
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    auto add_json = [&](CLI::App *sub) { sub->add_flag("--json", common.json, "machine-readable output"); };

    // catalog
    auto *catalog = app.add_subcommand("catalog", "list the built-in constellations");
    bool cat_props = false;
    int cat_tmax = 8;
    catalog->add_flag("--properties", cat_props, "measure separation and design strengths at radius 1");
    catalog->add_option("--tmax", cat_tmax, "max design degree for --properties")->check(CLI::NonNegativeNumber);
    add_json(catalog);

    // build
    auto *bld = app.add_subcommand("build", "build a catalog code and write it as JSON");
    std::string b_name;
    double b_energy = 4.0;
    BuildOptions b_opts;
    std::string b_out;
    int b_S = -1, b_K = -1, b_n = -1, b_p = -1;
    bld->add_option("--name", b_name, "catalog name")->required();
    bld->add_option("--energy", b_energy, "radius_sq = total mean photon number")->check(CLI::PositiveNumber);
    bld->add_option("--S", b_S, "cat: points per codeword");
    bld->add_option("--K", b_K, "number of codewords");
    bld->add_option("--n", b_n, "number of modes");
    bld->add_option("--p", b_p, "root-of-unity order for complex polytopes");
    bld->add_option("--partition", b_opts.partition, "named partition");
    bld->add_option("--out", b_out, "output file (stdout when omitted)");

    // design
    auto *design = app.add_subcommand("design", "spherical-design and moment-matching strengths");
    std::string d_in, d_csv;
    int d_tmax = 8;
    double d_tol = 1e-9;
    long long d_mc = 0;
    unsigned d_seed = 1;
    design->add_option("--in", d_in, "code JSON")->required();
    design->add_option("--tmax", d_tmax)->check(CLI::NonNegativeNumber);
    design->add_option("--tol", d_tol);
    design->add_option("--csv", d_csv, "per-degree residuals as CSV");
    design->add_option("--mc-samples", d_mc, "Monte Carlo check of the sphere averages (degree <= 4)");
    design->add_option("--seed", d_seed, "Monte Carlo seed");
    add_json(design);

    // kl
    auto *kl = app.add_subcommand("kl", "Knill-Laflamme matrices for monomial errors");
    std::string k_in, k_csv;
    int k_deg = 2, k_deph = 0;
    double k_tol = 1e-6;
    kl->add_option("--in", k_in, "code JSON")->required();
    kl->add_option("--max-degree", k_deg)->check(CLI::NonNegativeNumber);
    kl->add_option("--dephasing", k_deph, "include n_i^k for k up to this power")->check(CLI::Range(0, 20));
    kl->add_option("--tol", k_tol);
    kl->add_option("--csv", k_csv);
    add_json(kl);

    // symmetries
    auto *sym = app.add_subcommand("symmetries", "phase-rotation symmetries (Z-type / X-type)");
    std::string s_in;
    int s_order = 4;
    double s_tol = 1e-9;
    sym->add_option("--in", s_in, "code JSON")->required();
    sym->add_option("--max-order", s_order)->check(CLI::PositiveNumber);
    sym->add_option("--tol", s_tol);
    add_json(sym);

    // ideal
    auto *ideal = app.add_subcommand("ideal", "vanishing ideal: jump operators annihilating the code");
    std::string i_in;
    int i_deg = 4;
    double i_tol = 1e-8;
    ideal->add_option("--in", i_in, "code JSON")->required();
    ideal->add_option("--max-degree", i_deg)->check(CLI::PositiveNumber);
    ideal->add_option("--tol", i_tol);
    add_json(ideal);

    // css
    auto *css = app.add_subcommand("css", "compile a CSS code concatenated with cat codes");
    int c_q = 2;
    std::string c_gx, c_gz, c_out;
    std::size_t c_len = 0;
    double c_re = 2.0, c_im = 0.0;
    bool c_props = false;
    css->add_option("--q", c_q, "prime modulus");
    css->add_option("--gx", c_gx, "generator matrix of C_X (one row per line)");
    css->add_option("--gz", c_gz, "generator matrix of C_Z");
    css->add_option("--length", c_len, "code length when both matrices are empty");
    css->add_option("--alpha", c_re, "cat amplitude (real part)");
    css->add_option("--alpha-im", c_im, "cat amplitude (imaginary part)");
    css->add_option("--out", c_out, "write the compiled code JSON here");
    css->add_flag("--properties", c_props, "classical distances and measured code properties");
    add_json(css);

    // perf
    auto *perf = app.add_subcommand("perf", "channel fidelity with transpose-channel recovery");
    std::string p_in, p_channel = "loss", p_levels = "0.001:0.05:10", p_csv;
    int p_cutoff = 60, p_nodes = 64;
    perf->add_option("--in", p_in, "code JSON")->required();
    perf->add_option("--channel", p_channel)->check(CLI::IsMember({"loss", "dephasing"}));
    perf->add_option("--gammas,--sigmas", p_levels, "noise levels: value or start:stop:count");
    perf->add_option("--cutoff", p_cutoff)->check(CLI::Range(2, 4096));
    perf->add_option("--nodes", p_nodes, "Gauss-Hermite nodes for dephasing")->check(CLI::PositiveNumber);
    perf->add_option("--csv", p_csv);
    add_json(perf);

    // table
    auto *table = app.add_subcommand("table", "summary table for every catalog code");
    TableOptions t_opts;
    std::string t_csv;
    bool t_md = false;
    table->add_option("--tmax", t_opts.t_max)->check(CLI::NonNegativeNumber);
    table->add_option("--max-degree", t_opts.max_degree)->check(CLI::NonNegativeNumber);
    table->add_option("--energy", t_opts.energy)->check(CLI::PositiveNumber);
    table->add_option("--kl-tol", t_opts.kl_tol);
    table->add_option("--ideal-degree", t_opts.ideal_degree)->check(CLI::PositiveNumber);
    table->add_option("--csv", t_csv);
    table->add_flag("--markdown", t_md, "print a Markdown table instead of CSV");
    add_json(table);

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*catalog) {
            return cmd_catalog(out, common, cat_props, cat_tmax);
        }
        if (*bld) {
            if (b_S >= 0) b_opts.S = b_S;
            if (b_K >= 0) b_opts.K = b_K;
            if (b_n >= 0) b_opts.n = b_n;
            if (b_p >= 0) b_opts.p = b_p;
            // Entries whose defaults differ from BuildOptions{} (e.g. cell24 K=3) keep them unless overridden.
            for (const auto &e : list_catalog()) {
                if (e.name == b_name) {
                    if (b_S < 0) b_opts.S = e.options.S;
                    if (b_K < 0) b_opts.K = e.options.K;
                    if (b_n < 0) b_opts.n = e.options.n;
                    if (b_p < 0) b_opts.p = e.options.p;
                }
            }
            QSCode code = build(b_name, b_energy, b_opts);
            if (b_out.empty()) {
                out << code_to_json(code);
            } else {
                write_code_file(code, b_out);
                out << "wrote " << entry_label(b_name, b_opts) << " (" << code.total_points() << " points, K = "
                    << code.num_codewords() << ", radius_sq = " << num(b_energy) << ") to " << b_out << "\n";
            }
            return kExitOk;
        }
        if (*design) {
            return cmd_design(out, err, common, d_in, d_tmax, d_tol, d_csv, d_mc, d_seed);
        }
        if (*kl) {
            return cmd_kl(out, common, k_in, k_deg, k_deph, k_tol, k_csv);
        }
        if (*sym) {
            return cmd_symmetries(out, common, s_in, s_order, s_tol);
        }
        if (*ideal) {
            return cmd_ideal(out, common, i_in, i_deg, i_tol);
        }
        if (*css) {
            return cmd_css(out, common, c_q, c_gx, c_gz, c_len, c_re, c_im, c_out, c_props);
        }
        if (*perf) {
            return cmd_perf(out, err, common, p_in, p_channel, p_levels, p_cutoff, p_nodes, p_csv);
        }
        if (*table) {
            return cmd_table(out, err, common, t_opts, t_csv, t_md);
        }
    } catch (const CLI::ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace qsc::cli
