// Copyright 2026 The Pauli Cone Authors
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


// pauli-cone: command-line front end.
//   check   flags and spectra of one multiplier
//   rays    extremal ray census as JSON
//   verify  acceptance suites
//   scan    region grids as CSV and SVG
//   tables  combinatorial tables as CSV
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pauli_cone/cone_geometry.hpp"
#include "pauli_cone/decomposability.hpp"
#include "pauli_cone/json_io.hpp"
#include "pauli_cone/pattern_combinatorics.hpp"
#include "pauli_cone/pauli_maps.hpp"
#include "pauli_cone/symmetry.hpp"
#include "pauli_cone/verification.hpp"

namespace pc = pauli_cone;
using pc::Rat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string flag(bool b) {
    return b ? "true" : "false";
}

std::string join(const pc::RatVector &v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + pc::to_string(v[i]);
    }
    return s + "]";
}

pc::RatVector parse_list(const std::string &text, std::size_t want, const char *what) {
    pc::RatVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(pc::parse_rat(item));
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string(what) + ": " + e.what());
        }
    }
    if (out.size() != want) {
        throw UsageError(std::string(what) + ": expected " + std::to_string(want) + " comma-separated rationals");
    }
    return out;
}

Rat parse_cli_rat(const std::string &text, const char *what) {
    try {
        return pc::parse_rat(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return out;
}

void finish_out(std::ofstream &out, const std::string &path) {
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

// ---- check ----

struct CheckOptions {
    std::string mu_file;
    std::string xyz;
    std::string family;
    bool tensor_square = false;
};

pc::MultiplierTensor load_multiplier(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    pc::json j;
    try {
        j = pc::json::parse(in);
    } catch (const pc::json::parse_error &e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
    try {
        return pc::multiplier_from_json(j);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

std::string decomposable_text(const pc::MultiplierTensor &mu) {
    if (mu.order() <= 2) {
        const auto v = pc::is_decomposable(mu, pc::cone_rays(mu.order()));
        if (!v.decomposable) {
            std::string label = std::string(pc::to_string(pc::label_for_canonical(pc::canonical_form(v.violating_ray->pair))));
            return "false (separated by a " + label + " ray, <s,p> = " + pc::to_string(v.violation) + ")";
        }
        return "true";
    }
    if (pc::is_cp(mu) || pc::is_cocp(mu)) {
        return "true";
    }
    return "unknown (no ray census above order 2)";
}

int cmd_check(const CheckOptions &o) {
    const int sources = !o.mu_file.empty() + !o.xyz.empty() + !o.family.empty();
    if (sources != 1) {
        throw UsageError("check: give exactly one of --mu, --xyz, --family");
    }
    pc::MultiplierTensor mu{1, {1, 0, 0, 0}};
    if (!o.mu_file.empty()) {
        mu = load_multiplier(o.mu_file);
    } else if (!o.xyz.empty()) {
        const auto v = parse_list(o.xyz, 3, "--xyz");
        mu = pc::NamedQubitMap::custom(v[0], v[1], v[2]).multiplier();
    } else {
        try {
            mu = pc::NamedQubitMap::parse(o.family).multiplier();
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--family: ") + e.what());
        }
    }
    if (o.tensor_square && mu.order() != 1) {
        throw UsageError("--tensor-square needs an order-1 map");
    }

    const auto spec = pc::mult_to_spectrum(mu);
    std::cout << "order: " << mu.order() << "\n";
    std::cout << "mu: " << join(mu.coeffs()) << "\n";
    std::cout << "spectrum p: " << join(spec.p()) << "\n";
    std::cout << "spectrum q: " << join(spec.q()) << "\n";
    std::cout << "cp: " << flag(pc::is_cp(mu)) << "\n";
    std::cout << "cocp: " << flag(pc::is_cocp(mu)) << "\n";
    std::cout << "ppt: " << flag(pc::is_ppt(mu)) << "\n";
    if (mu.order() == 1) {
        std::cout << "positive: " << flag(pc::is_decomposable_n1_closed_form(mu)) << "\n";
    }
    std::cout << "decomposable: " << decomposable_text(mu) << "\n";
    if (mu[0] == 1) {
        const Rat r = pc::realignment_sum(mu);
        const Rat bound(pc::Int(1) << mu.order());
        std::cout << "realignment sum: " << pc::to_string(r) << (r > bound ? " > " : " <= ") << pc::to_string(bound)
                  << (r > bound ? " (not entanglement breaking)" : "") << "\n";
    } else {
        std::cout << "realignment sum: n/a (mu at index 0 is " << pc::to_string(mu[0]) << ", not 1)\n";
    }
    if (o.tensor_square) {
        const Rat &x = mu[1], &y = mu[2], &z = mu[3];
        const bool pos = pc::tensor_square_positive(x, y, z);
        const auto sq = pc::tensor(mu, mu);
        std::cout << "tensor square positive: " << flag(pos) << "\n";
        std::cout << "tensor square decomposable: " << decomposable_text(sq) << "\n";
        if (pos) {
            std::cout << "tensor square decomposable (closed form): " << flag(pc::tensor_square_decomposable(x, y, z))
                      << "\n";
        }
    }
    return kExitOk;
}

// ---- rays ----

int cmd_rays(int n, const std::string &out_path, bool orbits) {
    if (n != 1 && n != 2) {
        throw UsageError("rays: --n must be 1 or 2");
    }
    const auto &rays = pc::labeled_cone_rays(n);
    std::cout << "rays: " << rays.size() << "\n";
    if (orbits) {
        for (const auto &o : pc::orbit_decompose(rays)) {
            std::cout << "orbit " << pc::to_string(o.label) << ": " << o.size << "\n";
        }
    }
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << pc::rays_to_json(rays).dump(1) << "\n";
        finish_out(out, out_path);
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

// ---- verify ----

int cmd_verify(const std::string &suite) {
    std::vector<int> criteria;
    try {
        criteria = pc::suite_criteria(suite);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    bool ok = true;
    for (int c : criteria) {
        const auto r = pc::run_criterion(c);
        std::cout << pc::format_result(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? kExitOk : kExitFailed;
}

// ---- scan ----

struct Cell {
    std::vector<Rat> params;
    bool positive = false;
    bool decomposable = false;
    bool cp = false;
    bool cocp = false;
    bool ppt = false;
};

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("PAULI_CONE_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                n = std::min<unsigned>(n, static_cast<unsigned>(cap));
            }
        } catch (const std::exception &) {
            throw UsageError("PAULI_CONE_THREADS must be a positive integer");
        }
    }
    return n;
}

// Evaluates f at every index in parallel; output order is the index order.
template <class F>
std::vector<Cell> parallel_map(std::size_t count, F f) {
    std::vector<Cell> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned threads = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

std::vector<Rat> grid(const Rat &lo, const Rat &hi, const Rat &step) {
    std::vector<Rat> v;
    for (Rat x = lo; x <= hi; x += step) {
        v.push_back(x);
    }
    return v;
}

Cell from_region(const pc::RegionPoint &p) {
    Cell c;
    for (const auto &kv : p.params) {
        c.params.push_back(kv.second);
    }
    c.positive = p.positive == pc::Tri::True;
    c.decomposable = p.decomposable;
    c.cp = p.cp;
    c.cocp = p.cocp;
    c.ppt = p.ppt;
    return c;
}

Cell starry_cell(const Rat &x, const Rat &y, const Rat &z) {
    const pc::MultiplierTensor q{1, {1, x, y, z}};
    const auto sq = pc::tensor(q, q);
    Cell c;
    c.params = {x, y, z};
    c.positive = pc::tensor_square_positive(x, y, z);
    c.decomposable = pc::is_decomposable_n2_closed_form(sq);
    c.cp = pc::is_cp(sq);
    c.cocp = pc::is_cocp(sq);
    c.ppt = c.cp && c.cocp;
    return c;
}

const char *fill_of(const Cell &c) {
    if (c.decomposable) {
        return "#a0a0a0";
    }
    return c.positive ? "#000000" : "#ffffff";
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v;
    return s.str();
}

// One square panel of cells over [x0,x1] x [y0,y1], y pointing up.
void svg_panel(std::ostream &out, const std::vector<const Cell *> &cells, std::size_t ix, std::size_t iy, double x0,
               double x1, double y0, double y1, const Rat &step, double left, double top, double size,
               const std::string &title, const std::string &xlabel, const std::string &ylabel) {
    const double sx = size / (x1 - x0 + step.get_d()), sy = size / (y1 - y0 + step.get_d());
    const double cw = step.get_d() * sx, ch = step.get_d() * sy;
    out << "<g>\n";
    for (const Cell *c : cells) {
        const double x = c->params[ix].get_d(), y = c->params[iy].get_d();
        const double px = left + (x - x0) * sx;
        const double py = top + size - (y - y0) * sy - ch;
        out << "<rect x=\"" << fmt(px) << "\" y=\"" << fmt(py) << "\" width=\"" << fmt(cw) << "\" height=\"" << fmt(ch)
            << "\" fill=\"" << fill_of(*c) << "\"/>\n";
    }
    out << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(size) << "\" height=\""
        << fmt(size) << "\" fill=\"none\" stroke=\"#404040\"/>\n";
    out << "<text x=\"" << fmt(left + size / 2) << "\" y=\"" << fmt(top - 8)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
    out << "<text x=\"" << fmt(left + size / 2) << "\" y=\"" << fmt(top + size + 30)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel << "</text>\n";
    out << "<text x=\"" << fmt(left - 28) << "\" y=\"" << fmt(top + size / 2) << "\" text-anchor=\"middle\" font-size=\"12\""
        << " transform=\"rotate(-90 " << fmt(left - 28) << " " << fmt(top + size / 2) << ")\">" << ylabel << "</text>\n";
    out << "<text x=\"" << fmt(left) << "\" y=\"" << fmt(top + size + 14) << "\" font-size=\"10\">" << x0 << "</text>\n";
    out << "<text x=\"" << fmt(left + size) << "\" y=\"" << fmt(top + size + 14)
        << "\" text-anchor=\"end\" font-size=\"10\">" << x1 << "</text>\n";
    out << "<text x=\"" << fmt(left - 4) << "\" y=\"" << fmt(top + size) << "\" text-anchor=\"end\" font-size=\"10\">" << y0
        << "</text>\n";
    out << "<text x=\"" << fmt(left - 4) << "\" y=\"" << fmt(top + 10) << "\" text-anchor=\"end\" font-size=\"10\">" << y1
        << "</text>\n";
    out << "</g>\n";
}

void svg_legend(std::ostream &out, double left, double top) {
    const char *fills[3] = {"#a0a0a0", "#000000", "#ffffff"};
    const char *names[3] = {"decomposable", "positive, not decomposable", "not positive"};
    for (int i = 0; i < 3; ++i) {
        const double y = top + 20.0 * i;
        out << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(y) << "\" width=\"12\" height=\"12\" fill=\"" << fills[i]
            << "\" stroke=\"#404040\"/>\n";
        out << "<text x=\"" << fmt(left + 18) << "\" y=\"" << fmt(y + 10) << "\" font-size=\"12\">" << names[i]
            << "</text>\n";
    }
}

struct ScanOptions {
    std::string region;
    std::string step = "1/50";
    std::string csv;
    std::string svg;
    std::string z;
};

int cmd_scan(const ScanOptions &o) {
    const Rat step = parse_cli_rat(o.step, "--step");
    if (step <= 0 || step > pc::frac(1, 4)) {
        throw UsageError("--step must lie in (0, 1/4]");
    }
    if (o.region != "theta" && o.region != "lambda" && o.region != "starry") {
        throw UsageError("--region must be theta, lambda or starry");
    }
    if (!o.z.empty() && o.region != "starry") {
        throw UsageError("--z applies to --region starry only");
    }

    std::vector<Cell> cells;
    std::vector<std::string> header;
    std::vector<Rat> slices;
    if (o.region == "starry") {
        if (o.z.empty()) {
            slices = grid(-1, 1, pc::frac(1, 4));
        } else {
            slices = {parse_cli_rat(o.z, "--z")};
            if (slices[0] < -1 || slices[0] > 1) {
                throw UsageError("--z must lie in [-1, 1]");
            }
        }
        const auto xs = grid(-1, 1, step);
        const std::size_t per = xs.size() * xs.size();
        cells = parallel_map(slices.size() * per, [&](std::size_t i) {
            const std::size_t s = i / per, r = i % per;
            return starry_cell(xs[r / xs.size()], xs[r % xs.size()], slices[s]);
        });
        header = {"x", "y", "z"};
    } else {
        const auto us = grid(0, 1, step);
        const bool theta = o.region == "theta";
        cells = parallel_map(us.size() * us.size(), [&](std::size_t i) {
            const Rat &u = us[i / us.size()], &t = us[i % us.size()];
            return from_region(theta ? pc::region_theta(u, t) : pc::region_lambda(u, t));
        });
        header = {theta ? "a" : "b", "t"};
    }

    if (!o.csv.empty()) {
        auto out = open_out(o.csv);
        for (const auto &h : header) {
            out << h << ",";
        }
        out << "positive,decomposable,cp,cocp,ppt\n";
        for (const auto &c : cells) {
            for (const auto &p : c.params) {
                out << pc::to_string(p) << ",";
            }
            out << c.positive << "," << c.decomposable << "," << c.cp << "," << c.cocp << "," << c.ppt << "\n";
        }
        finish_out(out, o.csv);
    }

    if (!o.svg.empty()) {
        auto out = open_out(o.svg);
        const double panel = 300, margin = 60, gap = 70;
        const std::size_t cols = o.region == "starry" ? std::min<std::size_t>(3, slices.size()) : 1;
        const std::size_t rows = o.region == "starry" ? (slices.size() + cols - 1) / cols : 1;
        const double width = margin + cols * (panel + gap), height = margin + rows * (panel + gap) + 70;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
            << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
        out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
        if (o.region == "starry") {
            const std::size_t per = cells.size() / slices.size();
            for (std::size_t s = 0; s < slices.size(); ++s) {
                std::vector<const Cell *> slice;
                for (std::size_t i = s * per; i < (s + 1) * per; ++i) {
                    slice.push_back(&cells[i]);
                }
                const double left = margin + (s % cols) * (panel + gap), top = margin + (s / cols) * (panel + gap);
                svg_panel(out, slice, 0, 1, -1, 1, -1, 1, step, left, top, panel, "z = " + pc::to_string(slices[s]), "x",
                          "y");
            }
        } else {
            std::vector<const Cell *> all;
            for (const auto &c : cells) {
                all.push_back(&c);
            }
            const std::string title = o.region == "theta" ? "T_t (x) theta_a" : "T_t (x) Pi_lambda_b";
            svg_panel(out, all, 0, 1, 0, 1, 0, 1, step, margin, margin, panel, title, header[0], "t");
        }
        svg_legend(out, margin, height - 70);
        out << "</svg>\n";
        finish_out(out, o.svg);
    }

    std::size_t pos = 0, dec = 0;
    for (const auto &c : cells) {
        pos += c.positive;
        dec += c.decomposable;
    }
    std::cout << "points: " << cells.size() << "\n";
    std::cout << "positive: " << pos << "\n";
    std::cout << "decomposable: " << dec << "\n";
    std::cout << "positive, not decomposable: " << pos - std::min(pos, dec) << "\n";
    return kExitOk;
}

// ---- tables ----

int cmd_tables(const std::string &which, const std::string &csv) {
    pc::CountTable t{};
    if (which == "kostka") {
        t = pc::kostka_table();
    } else if (which == "counts") {
        t = pc::brualdi_table();
        if (t != pc::enumeration_table()) {
            std::cerr << "counts: formula and enumeration disagree\n";
            return kExitFailed;
        }
    } else if (which == "classes") {
        t = pc::class_table();
    } else {
        throw UsageError("--which must be kostka, counts or classes");
    }
    std::ostringstream s;
    const auto &ps = pc::table_partitions();
    s << "\"r\\s\"";
    for (const auto &p : ps) {
        s << ",\"" << p.str() << "\"";
    }
    s << "\n";
    for (std::size_t i = 0; i < 8; ++i) {
        s << "\"" << ps[i].str() << "\"";
        for (std::size_t j = 0; j < 8; ++j) {
            s << "," << t[i][j];
        }
        s << "\n";
    }
    if (csv.empty()) {
        std::cout << s.str();
    } else {
        auto out = open_out(csv);
        out << s.str();
        finish_out(out, csv);
        std::cout << "wrote " << csv << "\n";
    }
    if (which == "classes") {
        long long total = 0;
        for (const auto &row : t) {
            for (long long v : row) {
                total += v;
            }
        }
        std::cerr << "classes: " << total << " (transposes merged: " << pc::transpose_merged_class_total() << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact tools for Pauli diagonal maps and the cone of their PPT spectra"};
    app.require_subcommand(1);

    CheckOptions check;
    auto *c = app.add_subcommand("check", "Flags, spectra and witnesses for one multiplier");
    c->add_option("--mu", check.mu_file, "JSON file {\"n\": N, \"coeffs\": [\"a/b\", ...]}");
    c->add_option("--xyz", check.xyz, "Qubit multiplier (1, x, y, z) as x,y,z");
    c->add_option("--family", check.family, "depol:t, theta:a or lambda:b");
    c->add_flag("--tensor-square", check.tensor_square, "Also decide positivity of the map tensored with itself");

    int rays_n = 0;
    std::string rays_out;
    bool rays_orbits = false;
    auto *r = app.add_subcommand("rays", "Extremal rays of the PPT spectra cone");
    r->add_option("--n", rays_n, "Tensor order, 1 or 2")->required();
    r->add_option("--out", rays_out, "Write the census as JSON");
    r->add_flag("--orbits", rays_orbits, "Print orbit sizes");

    std::string suite = "all";
    auto *v = app.add_subcommand("verify", "Run acceptance suites");
    v->add_option("--suite", suite, "all, rays, tables, pptsq or main");

    ScanOptions scan;
    auto *s = app.add_subcommand("scan", "Exact region scans");
    s->add_option("--region", scan.region, "theta, lambda or starry")->required();
    s->add_option("--step", scan.step, "Grid step in (0, 1/4], as a/b");
    s->add_option("--csv", scan.csv, "CSV output")->required();
    s->add_option("--svg", scan.svg, "SVG plot output");
    s->add_option("--z", scan.z, "Single z slice for starry");

    std::string which, tables_csv;
    auto *t = app.add_subcommand("tables", "Kostka numbers, matrix counts and pattern classes");
    t->add_option("--which", which, "kostka, counts or classes")->required();
    t->add_option("--csv", tables_csv, "CSV output (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c->parsed()) {
            return cmd_check(check);
        }
        if (r->parsed()) {
            return cmd_rays(rays_n, rays_out, rays_orbits);
        }
        if (v->parsed()) {
            return cmd_verify(suite);
        }
        if (s->parsed()) {
            return cmd_scan(scan);
        }
        if (t->parsed()) {
            return cmd_tables(which, tables_csv);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
