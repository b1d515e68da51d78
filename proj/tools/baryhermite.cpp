// baryhermite: barycentric Hermite interpolation experiments and batch
// weight/interpolant computation. CSV out, JSON problem files in.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "bh/core.hpp"
#include "bh/errors.hpp"
#include "bh/eval.hpp"
#include "bh/experiments.hpp"
#include "bh/grids.hpp"
#include "bh/io.hpp"
#include "bh/update.hpp"
#include "bh/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bh::ParseError("cannot write output file: " + path);
    return out;
}

std::ostream& out_or_stdout(std::ofstream& file, const std::string& path) {
    return path.empty() ? std::cout : file;
}

bh::Form parse_form(int form) {
    if (form == 1) return bh::Form::First;
    if (form == 2) return bh::Form::Second;
    throw CLI::ValidationError("--form", "form must be 1 or 2");
}

struct CommonIo {
    std::string grid_file;
    std::string out_file;
};

int cmd_weights(const CommonIo& io, double scale, bool leja) {
    auto [grid, data] = bh::read_problem(io.grid_file);
    if (scale != 1.0) std::tie(grid, data) = bh::scale_problem(grid, data, scale);
    if (leja) {
        auto perm = bh::leja_order(grid.points);
        std::tie(grid, data) = bh::apply_permutation(grid, data, perm);
    }
    auto [w, cache] = bh::hermite_weights(grid);
    std::ofstream file;
    if (!io.out_file.empty()) file = open_out(io.out_file);
    bh::write_weights_csv(out_or_stdout(file, io.out_file), grid, w);
    return kExitOk;
}

int cmd_interp(const CommonIo& io, int form, double scale, bool leja, int samples,
               const std::vector<double>& at, const std::string& weights_file) {
    auto [grid, data] = bh::read_problem(io.grid_file);
    if (scale != 1.0) std::tie(grid, data) = bh::scale_problem(grid, data, scale);
    if (leja) {
        auto perm = bh::leja_order(grid.points);
        std::tie(grid, data) = bh::apply_permutation(grid, data, perm);
    }
    bh::WeightTable w;
    if (!weights_file.empty()) {
        w = bh::read_weights_csv(weights_file, grid);
    } else {
        w = bh::hermite_weights(grid).first;
    }
    std::vector<double> zs;
    if (!at.empty()) {
        zs = at;
    } else {
        double lo = *std::min_element(grid.points.begin(), grid.points.end());
        double hi = *std::max_element(grid.points.begin(), grid.points.end());
        for (int i = 0; i < samples; ++i)
            zs.push_back(samples > 1 ? lo + (hi - lo) * i / (samples - 1) : lo);
    }
    auto vals = bh::sample_interpolant(grid, w, data, zs, parse_form(form));
    std::ofstream file;
    if (!io.out_file.empty()) file = open_out(io.out_file);
    std::ostream& out = out_or_stdout(file, io.out_file);
    out << "z,value,error\n";
    bool any_bad = false;
    for (const auto& s : vals) {
        out << bh::format_number(s.z) << ',' << (s.ok ? bh::format_number(s.value) : "nan") << ','
            << (s.ok ? "" : "nonfinite") << '\n';
        any_bad = any_bad || !s.ok;
    }
    return any_bad ? kExitNumeric : kExitOk;
}

int cmd_experiment_runge(const CommonIo& io, int K, int n, int form, int samples, bool leja) {
    bh::check_fp_environment();
    auto res = bh::run_runge_experiment(K, n, parse_form(form), samples, leja);
    std::ofstream file;
    if (!io.out_file.empty()) file = open_out(io.out_file);
    std::ostream& out = out_or_stdout(file, io.out_file);
    out << "x,error\n";
    for (const auto& row : res.rows)
        out << bh::format_number(row.x) << ',' << (row.ok ? bh::format_number(row.error) : "nan")
            << '\n';
    std::cerr << "sup_error=" << bh::format_number(res.sup_error)
              << " interior_max=" << bh::format_number(res.interior_max)
              << " endpoint_max=" << bh::format_number(res.endpoint_max) << "\n";
    return kExitOk;
}

int cmd_experiment_hat(const CommonIo& io, int K_max, int n, int form, int samples, bool leja) {
    bh::check_fp_environment();
    std::ofstream file;
    if (!io.out_file.empty()) file = open_out(io.out_file);
    std::ostream& out = out_or_stdout(file, io.out_file);
    out << "K,n,sup_error\n";
    for (int K = 16; K <= K_max; K *= 2) {
        auto res = bh::run_hat_experiment(K, n, parse_form(form), samples, leja);
        out << K << ',' << n << ',' << bh::format_number(res.sup_error) << '\n';
    }
    return kExitOk;
}

int cmd_weight_error(const CommonIo& io, int K, int n) {
    bh::check_fp_environment();
    auto res = bh::weight_error_experiment(K, n);
    std::ofstream file;
    if (!io.out_file.empty()) file = open_out(io.out_file);
    std::ostream& out = out_or_stdout(file, io.out_file);
    out << "k,z,r,rel_error,is_absolute\n";
    for (std::size_t k = 0; k < res.report.values.size(); ++k)
        for (std::size_t r = 0; r < res.report.values[k].size(); ++r)
            out << (k + 1) << ',' << bh::format_number(res.grid.points[k]) << ',' << r << ','
                << bh::format_number(res.report.values[k][r]) << ','
                << int(res.report.absolute_flag[k][r]) << '\n';
    std::cerr << "max_rel_error=" << bh::format_number(res.report.max_relative) << "\n";
    return kExitOk;
}

int cmd_update_demo(const CommonIo& io, const std::vector<double>& insertions) {
    bh::check_fp_environment();
    auto [grid, data] = bh::read_problem(io.grid_file);
    auto rows = bh::run_update_demo(grid, insertions);
    std::ofstream file;
    if (!io.out_file.empty()) file = open_out(io.out_file);
    std::ostream& out = out_or_stdout(file, io.out_file);
    out << "zeta,extended_existing,max_rel_dev,ops,N\n";
    for (const auto& row : rows)
        out << bh::format_number(row.zeta) << ',' << int(row.extended_existing) << ','
            << bh::format_number(row.max_rel_dev) << ',' << row.ops << ',' << row.N_after << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"barycentric Hermite interpolation toolkit"};
    app.require_subcommand(1);

    CommonIo io;
    double scale = 1.0;
    bool leja = false;       // weights / interp: off by default
    bool leja_exp = true;    // experiments: on by default, per the protocol
    int form = 2;
    int K = 16, n = 1, samples = 4096;
    long seed = 0;
    std::vector<double> at;
    std::string weights_file;
    std::vector<double> insertions;

    auto add_common = [&](CLI::App* c, bool needs_grid) {
        if (needs_grid) c->add_option("--grid", io.grid_file, "problem JSON file")->required();
        c->add_option("--out", io.out_file, "output CSV file (default stdout)");
        c->add_option("--seed", seed, "RNG seed (perturbation tests only)");
    };

    auto* w = app.add_subcommand("weights", "compute barycentric weights");
    add_common(w, true);
    w->add_option("--scale", scale, "scale factor sigma");
    w->add_flag("--leja,!--no-leja", leja, "Leja-order the grid");

    auto* it = app.add_subcommand("interp", "evaluate the interpolant");
    add_common(it, true);
    it->add_option("--form", form, "barycentric form, 1 or 2")->check(CLI::Range(1, 2));
    it->add_option("--scale", scale, "scale factor sigma");
    it->add_flag("--leja,!--no-leja", leja, "Leja-order the grid");
    it->add_option("--samples", samples, "uniform sample count");
    it->add_option("--at", at, "explicit evaluation points");
    it->add_option("--weights", weights_file, "weights CSV to reuse");

    auto* er = app.add_subcommand("experiment-runge", "Runge function interpolation error");
    add_common(er, false);
    er->add_option("--K", K, "grid point count")->required();
    er->add_option("--n", n, "derivative count per point")->required();
    er->add_option("--form", form, "barycentric form, 1 or 2")->check(CLI::Range(1, 2));
    er->add_option("--samples", samples, "uniform sample count");
    er->add_flag("--leja,!--no-leja", leja_exp, "Leja-order the grid (default on)");

    auto* eh = app.add_subcommand("experiment-hat", "hat function error vs K sweep");
    add_common(eh, false);
    eh->add_option("--K", K, "largest K in the doubling sweep")->required();
    eh->add_option("--n", n, "derivative count per point")->required();
    eh->add_option("--form", form, "barycentric form, 1 or 2")->check(CLI::Range(1, 2));
    eh->add_option("--samples", samples, "uniform sample count");
    eh->add_flag("--leja,!--no-leja", leja_exp, "Leja-order the grid (default on)");

    auto* we = app.add_subcommand("weight-error", "weights vs exact-rational oracle");
    add_common(we, false);
    we->add_option("--K", K, "grid point count")->required();
    we->add_option("--n", n, "derivative count per point")->required();

    auto* ud = app.add_subcommand("update-demo", "incremental vs from-scratch updates");
    add_common(ud, true);
    ud->add_option("--insert", insertions, "points to insert, in order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (w->parsed()) return cmd_weights(io, scale, leja);
        if (it->parsed()) return cmd_interp(io, form, scale, leja, samples, at, weights_file);
        if (er->parsed()) return cmd_experiment_runge(io, K, n, form, samples, leja_exp);
        if (eh->parsed()) return cmd_experiment_hat(io, K, n, form, samples, leja_exp);
        if (we->parsed()) return cmd_weight_error(io, K, n);
        if (ud->parsed()) return cmd_update_demo(io, insertions);
    } catch (const bh::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bh::GridError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bh::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
