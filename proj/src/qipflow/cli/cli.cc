// Copyright 2026 The qipflow Authors
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

#include "qipflow/cli/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qipflow/channels/trajectory.h"
#include "qipflow/errors.h"
#include "qipflow/io/csv.h"
#include "qipflow/numerics/calculus.h"
#include "qipflow/states/correlations.h"
#include "qipflow/witnesses/measures.h"
#include "qipflow/witnesses/report_io.h"

namespace qipflow::cli {

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string convention = "sqrt";
    double tol = 1e-8;
    size_t grid_points = 0;
    double t_max = 0;

    std::string channel;
    double alpha = 1.0;
    double omega_c = 1.0;
    double s = 3.0;
    double lambda = 0.1;
    double delta = 0.01;
    bool volterra = false;

    std::string state = "bell";
    double r = 1.0;
    std::string rho0;
    bool compare = false;

    std::string measure = "qip";
    std::string family;
    std::vector<double> pair_bloch;
    std::string trajectory_csv;

    std::string param;
    std::vector<double> values;

    int figure = 0;
    std::vector<std::string> csv;
};

struct Parsed {
    bool grid_points_set = false;
    bool t_max_set = false;
    bool family_set = false;
    bool pair_set = false;
    bool channel_set = false;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> parts;
    std::string p;
    while (in >> p) {
        parts.push_back(p);
    }
    return parts;
}

void emit(const Options &opts, const std::string &text, std::ostream &out) {
    if (opts.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) {
        throw InvalidInput("cannot write '" + opts.out + "'");
    }
    f << text;
}

std::vector<double> make_grid(const Options &opts, const Parsed &parsed, ChannelKind kind) {
    size_t n = parsed.grid_points_set ? opts.grid_points : (kind == ChannelKind::kDephasing ? 4001 : 6001);
    double t_max = parsed.t_max_set ? opts.t_max : (kind == ChannelKind::kDephasing ? 50.0 : 60.0);
    if (n < 3) {
        throw InvalidInput("--grid-points must be at least 3");
    }
    if (!(t_max > 0) || !std::isfinite(t_max)) {
        throw InvalidInput("--t-max must be positive (grid too short)");
    }
    return uniform_grid(0, t_max, n);
}

ChannelTrajectory build_trajectory(const Options &opts, const Parsed &parsed, ChannelKind kind) {
    auto grid = make_grid(opts, parsed, kind);
    if (kind == ChannelKind::kDephasing) {
        return dephasing_trajectory(OhmicSpectralDensity(opts.alpha, opts.omega_c, opts.s), grid, opts.tol);
    }
    LorentzianSpectralDensity sd(1.0, opts.lambda, opts.delta);
    return opts.volterra ? damping_trajectory_volterra(sd, grid) : damping_trajectory(sd, grid);
}

std::vector<std::pair<std::string, std::string>> channel_metadata(const Options &opts, ChannelKind kind) {
    std::vector<std::pair<std::string, std::string>> meta;
    if (kind == ChannelKind::kDephasing) {
        meta.emplace_back("alpha", num(opts.alpha));
        meta.emplace_back("omega_c", num(opts.omega_c));
        meta.emplace_back("S", num(opts.s));
    } else {
        meta.emplace_back("lambda_over_gamma0", num(opts.lambda));
        meta.emplace_back("delta_over_gamma0", num(opts.delta));
        meta.emplace_back("amplitude", opts.volterra ? "volterra" : "closed_form");
    }
    return meta;
}

DensityMatrix read_rho0(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open --rho0 file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput("--rho0: " + std::string(e.what()));
    }
    try {
        auto dims = doc.at("dims").get<std::vector<size_t>>();
        auto re = doc.at("re").get<std::vector<std::vector<double>>>();
        std::vector<std::vector<double>> im;
        if (doc.contains("im")) {
            im = doc.at("im").get<std::vector<std::vector<double>>>();
        }
        size_t n = re.size();
        ComplexMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) {
            if (re[i].size() != n || (!im.empty() && (im.size() != n || im[i].size() != n))) {
                throw InvalidInput("--rho0: matrix must be square");
            }
            for (size_t j = 0; j < n; ++j) {
                m(i, j) = Complex(re[i][j], im.empty() ? 0.0 : im[i][j]);
            }
        }
        return DensityMatrix(m, dims);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput("--rho0: expected {\"dims\": [...], \"re\": [[...]], \"im\": [[...]]}: " +
                           std::string(e.what()));
    }
}

std::pair<std::string, DensityMatrix> initial_state(const Options &opts) {
    if (opts.state == "bell") {
        return {"bell", bell_phi()};
    }
    if (opts.state == "werner") {
        return {"werner(r=" + num(opts.r) + ")", werner(opts.r)};
    }
    if (opts.rho0.empty()) {
        throw InvalidInput("--state file needs --rho0 <path>");
    }
    DensityMatrix rho = read_rho0(opts.rho0);
    require_two_qubit(rho, "--rho0");
    return {"file:" + opts.rho0, rho};
}

std::pair<DensityMatrix, DensityMatrix> blp_pair(const Options &opts, const Parsed &parsed, ChannelKind kind) {
    if (!parsed.pair_set) {
        return default_blp_pair(kind);
    }
    const auto &p = opts.pair_bloch;
    return {qubit_from_bloch(p[0], p[1], p[2]), qubit_from_bloch(p[3], p[4], p[5])};
}

std::string blp_label(const Options &opts, const Parsed &parsed, ChannelKind kind) {
    if (!parsed.pair_set) {
        return kind == ChannelKind::kDephasing ? "pair(+x,-x)" : "pair(+z,-z)";
    }
    std::string s = "pair(";
    for (size_t k = 0; k < 6; ++k) {
        s += (k == 0 ? "" : (k == 3 ? ";" : " ")) + num(opts.pair_bloch[k]);
    }
    return s + ")";
}

MeasureReport qip_report(const ChannelTrajectory &traj, const Options &opts, const Parsed &parsed) {
    QipConvention conv = parse_convention(opts.convention);
    if (parsed.family_set) {
        return optimize_initial_state(traj, InitialStateFamily::parse(opts.family), conv);
    }
    auto [label, rho] = initial_state(opts);
    return n_qip(traj, rho, conv, label);
}

ChannelKind require_channel(const Options &opts) {
    return parse_channel(opts.channel);
}

int cmd_evolve(const Options &opts, const Parsed &parsed, std::ostream &out) {
    ChannelKind kind = require_channel(opts);
    auto traj = build_trajectory(opts, parsed, kind);
    CsvTable table = trajectory_to_csv(traj);
    for (auto &kv : channel_metadata(opts, kind)) {
        table.metadata.push_back(kv);
    }
    emit(opts, to_csv_string(table), out);
    return kExitOk;
}

int cmd_qip_flow(const Options &opts, const Parsed &parsed, std::ostream &out) {
    ChannelKind kind = require_channel(opts);
    auto [label, rho0] = initial_state(opts);
    QipConvention conv = parse_convention(opts.convention);
    auto traj = build_trajectory(opts, parsed, kind);
    auto q = qip_flow(traj, rho0, conv);

    CsvTable table;
    table.metadata.emplace_back("time_unit", std::string(traj.time_unit()));
    table.metadata.emplace_back("channel", std::string(channel_name(kind)));
    for (auto &kv : channel_metadata(opts, kind)) {
        table.metadata.push_back(kv);
    }
    table.metadata.emplace_back("convention", std::string(convention_name(conv)));
    table.metadata.emplace_back("initial_state", label);
    bool damp = kind == ChannelKind::kDamping;
    table.header = {"t", damp ? "absJ" : "Gamma", "Q"};
    if (opts.compare) {
        table.header.insert(table.header.end(), {"C", "I"});
        if (damp) {
            table.header.push_back("absJ_half");
        }
    }
    for (size_t k = 0; k < traj.size(); ++k) {
        double channel_value = damp ? std::abs(traj.amplitude[k]) : traj.factor[k];
        std::vector<double> row{traj.times[k], channel_value, q[k]};
        if (opts.compare) {
            DensityMatrix rho_t = apply_channel(traj.map_at(k), rho0);
            row.push_back(concurrence(rho_t));
            row.push_back(mutual_information(rho_t));
            if (damp) {
                row.push_back(channel_value / 2);
            }
        }
        table.rows.push_back(std::move(row));
    }
    emit(opts, to_csv_string(table), out);
    return kExitOk;
}

int cmd_measure(const Options &opts, const Parsed &parsed, std::ostream &out) {
    ChannelKind kind = require_channel(opts);
    auto traj = build_trajectory(opts, parsed, kind);
    MeasureReport report;
    if (opts.measure == "qip") {
        report = qip_report(traj, opts, parsed);
    } else if (opts.measure == "blp") {
        report = n_blp(traj, blp_pair(opts, parsed, kind), blp_label(opts, parsed, kind));
    } else if (opts.measure == "mutual") {
        auto [label, rho0] = initial_state(opts);
        report = n_mutual(traj, rho0, label);
    } else {
        report = n_rhp(traj);
    }
    if (!opts.trajectory_csv.empty()) {
        write_csv_file(opts.trajectory_csv, report_trajectory_csv(report));
    }
    emit(opts, report_to_json_text(report), out);
    return kExitOk;
}

int cmd_sweep(const Options &opts, const Parsed &parsed, std::ostream &out) {
    ChannelKind kind = opts.param == "S" ? ChannelKind::kDephasing : ChannelKind::kDamping;
    if (parsed.channel_set && parse_channel(opts.channel) != kind) {
        throw InvalidInput("--param " + opts.param + " does not apply to --channel " + opts.channel);
    }
    if (opts.values.empty()) {
        throw InvalidInput("--values needs at least one value");
    }
    // Validate the shared inputs once, before fanning out.
    initial_state(opts);
    blp_pair(opts, parsed, kind);

    std::vector<std::future<std::vector<double>>> jobs;
    for (double v : opts.values) {
        Options point = opts;
        (kind == ChannelKind::kDephasing ? point.s : point.lambda) = v;
        jobs.push_back(std::async(std::launch::async, [point, &parsed, kind, v] {
            auto traj = build_trajectory(point, parsed, kind);
            auto [label, rho0] = initial_state(point);
            double nq = qip_report(traj, point, parsed).value;
            double nb = n_blp(traj, blp_pair(point, parsed, kind), "pair").value;
            double ni = n_mutual(traj, rho0, label).value;
            double nr = n_rhp(traj).value;
            return std::vector<double>{v, nq, nb, ni, nr};
        }));
    }
    CsvTable table;
    table.metadata.emplace_back("param", opts.param);
    table.metadata.emplace_back("channel", std::string(channel_name(kind)));
    table.metadata.emplace_back("convention", opts.convention);
    table.header = {"param", "N_Q", "N_BLP", "N_I", "N_RHP"};
    std::exception_ptr failure;
    for (auto &job : jobs) {
        try {
            table.rows.push_back(job.get());
        } catch (...) {
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    emit(opts, to_csv_string(table), out);
    return kExitOk;
}

int cmd_plot_script(const Options &opts, std::ostream &out) {
    emit(opts, plot_script(opts.figure, opts.csv), out);
    return kExitOk;
}

void add_channel_options(CLI::App *sub, Options &o, bool channel_required) {
    auto *ch = sub->add_option("--channel", o.channel, "dephasing or damping")
                   ->check(CLI::IsMember({"dephasing", "damping"}));
    if (channel_required) {
        ch->required();
    }
    sub->add_option("--alpha", o.alpha, "Ohmic coupling strength")->capture_default_str();
    sub->add_option("--omega-c", o.omega_c, "Ohmic cutoff frequency")->capture_default_str();
    sub->add_option("--S", o.s, "Ohmicity parameter")->capture_default_str();
    sub->add_option("--lambda-over-gamma0", o.lambda, "Lorentzian width in units of gamma0")->capture_default_str();
    sub->add_option("--delta", o.delta, "detuning in units of gamma0")->capture_default_str();
    sub->add_flag("--volterra", o.volterra, "damping amplitude from the integro-differential equation");
}

void add_state_options(CLI::App *sub, Options &o) {
    sub->add_option("--state", o.state, "bell, werner or file")
        ->check(CLI::IsMember({"bell", "werner", "file"}))
        ->capture_default_str();
    sub->add_option("--r", o.r, "Werner mixing parameter")->capture_default_str();
    sub->add_option("--rho0", o.rho0, "JSON file {dims, re, im} for --state file");
}

bool present_in_argv(const std::vector<std::string> &args, const std::string &flag) {
    for (const auto &a : args) {
        if (a == flag || a.rfind(flag + "=", 0) == 0) {
            return true;
        }
    }
    return false;
}

std::string config_path(const std::vector<std::string> &args) {
    for (size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) {
            return args[k + 1];
        }
        if (args[k].rfind("--config=", 0) == 0) {
            return args[k].substr(9);
        }
    }
    return "";
}

bool truthy(const std::string &v) {
    return v == "true" || v == "1" || v == "yes" || v == "on";
}

/// Config values become extra tokens for flags absent from the command line.
std::vector<std::string> inject_config(CLI::App &app, std::vector<std::string> args) {
    std::string path = config_path(args);
    if (path.empty()) {
        return args;
    }
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open config file '" + path + "'");
    }
    auto cfg = parse_config(in);
    CLI::App *sub = nullptr;
    for (const auto &a : args) {
        for (CLI::App *candidate : app.get_subcommands([](CLI::App *) { return true; })) {
            if (candidate->get_name() == a) {
                sub = candidate;
                break;
            }
        }
        if (sub) {
            break;
        }
    }
    for (const auto &[key, value] : cfg) {
        std::string flag = "--" + key;
        if (key == "config") {
            throw InvalidInput("config file cannot set 'config'");
        }
        const CLI::Option *opt = app.get_option_no_throw(flag);
        if (!opt && sub) {
            opt = sub->get_option_no_throw(flag);
        }
        if (!opt) {
            bool known = false;
            for (CLI::App *candidate : app.get_subcommands([](CLI::App *) { return true; })) {
                known = known || candidate->get_option_no_throw(flag) != nullptr;
            }
            if (!known) {
                throw InvalidInput("unknown config key '" + key + "'");
            }
            continue;
        }
        if (present_in_argv(args, flag)) {
            continue;
        }
        if (opt->get_expected_max() == 0) {
            if (truthy(value)) {
                args.push_back(flag);
            }
            continue;
        }
        args.push_back(flag);
        for (auto &tok : split_ws(value)) {
            args.push_back(tok);
        }
    }
    return args;
}

std::string quote(const std::string &path) {
    std::string q = "'";
    for (char c : path) {
        q += c;
        if (c == '\'') {
            q += '\'';
        }
    }
    return q + "'";
}

CsvTable load_for_plot(const std::string &path, const std::vector<std::string> &columns) {
    CsvTable t = read_csv_file(path);
    for (const auto &c : columns) {
        t.column(c);
    }
    return t;
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream &in) {
    std::map<std::string, std::string> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) == 0) {
            key = key.substr(2);
        }
        if (key.empty() || value.empty()) {
            throw InvalidInput("config line " + std::to_string(lineno) + ": empty key or value");
        }
        if (!out.emplace(key, value).second) {
            throw InvalidInput("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
    }
    return out;
}

std::string plot_script(int figure, const std::vector<std::string> &csv_paths) {
    std::ostringstream s;
    s << "# gnuplot script generated by qipflow (figure " << figure << ")\n";
    s << "set datafile separator ','\n";
    s << "set datafile commentschars '#'\n";
    s << "set key autotitle columnhead\n";
    if (figure == 1) {
        if (csv_paths.size() != 1) {
            throw InvalidInput("figure 1 takes one sweep CSV");
        }
        CsvTable t = load_for_plot(csv_paths[0], {"param", "N_Q", "N_BLP", "N_I", "N_RHP"});
        std::string param = t.meta("param").value_or("param");
        s << "set style data linespoints\n";
        s << "set xlabel '" << param << "'\n";
        s << "set ylabel 'non-Markovianity'\n";
        s << "plot " << quote(csv_paths[0]) << " using 'param':'N_Q', \\\n"
          << "     '' using 'param':'N_BLP', \\\n"
          << "     '' using 'param':'N_I', \\\n"
          << "     '' using 'param':'N_RHP'\n";
    } else if (figure == 2) {
        if (csv_paths.size() != 3) {
            throw InvalidInput("figure 2 takes three qip-flow CSVs");
        }
        s << "set style data lines\n";
        s << "set xlabel 't gamma0'\n";
        s << "set ylabel 'Q'\n";
        s << "plot ";
        for (size_t k = 0; k < csv_paths.size(); ++k) {
            CsvTable t = load_for_plot(csv_paths[k], {"t", "Q", "absJ"});
            std::string lam = t.meta("lambda_over_gamma0").value_or("?");
            s << (k ? ", \\\n     " : "") << quote(csv_paths[k]) << " using 't':'Q' title 'lambda/gamma0 = " << lam
              << "'";
        }
        s << "\n";
    } else if (figure == 3) {
        if (csv_paths.size() != 1) {
            throw InvalidInput("figure 3 takes one qip-flow CSV written with --compare");
        }
        load_for_plot(csv_paths[0], {"t", "Q", "C", "I", "absJ_half"});
        s << "set style data lines\n";
        s << "set xlabel 't gamma0'\n";
        s << "plot " << quote(csv_paths[0]) << " using 't':'Q', \\\n"
          << "     '' using 't':'C', \\\n"
          << "     '' using 't':'I', \\\n"
          << "     '' using 't':'absJ_half'\n";
    } else {
        throw InvalidInput("--figure must be 1, 2 or 3");
    }
    return s.str();
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"qipflow: quantum interferometric power flow and non-Markovianity of qubit channels"};
    app.name("qipflow");
    app.require_subcommand(1);
    app.add_option("--config", o.config, "key = value file; command-line flags take precedence");
    app.add_option("--out", o.out, "output path (default: stdout)");
    app.add_option("--convention", o.convention, "QIP convention: eq4 (1 - lambda_max) or sqrt")
        ->check(CLI::IsMember({"eq4", "sqrt"}))
        ->capture_default_str();
    app.add_option("--tol", o.tol, "quadrature tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    auto *grid_opt = app.add_option("--grid-points", o.grid_points, "time grid points (dephasing 4001, damping 6001)");
    auto *tmax_opt = app.add_option("--t-max", o.t_max, "grid end time (dephasing 50/omega_c, damping 60/gamma0)");

    auto *evolve = app.add_subcommand("evolve", "write the channel trajectory CSV")->fallthrough();
    add_channel_options(evolve, o, true);

    auto *flow = app.add_subcommand("qip-flow", "write Q(t) for an initial state")->fallthrough();
    add_channel_options(flow, o, true);
    add_state_options(flow, o);
    flow->add_flag("--compare", o.compare, "add concurrence and mutual information columns");

    auto *measure = app.add_subcommand("measure", "compute one non-Markovianity measure (JSON report)")->fallthrough();
    add_channel_options(measure, o, true);
    add_state_options(measure, o);
    measure->add_option("--measure", o.measure, "qip, blp, mutual or rhp")
        ->check(CLI::IsMember({"qip", "blp", "mutual", "rhp"}))
        ->capture_default_str();
    auto *family_opt = measure->add_option("--family", o.family, "maximize QIP backflow over bell, werner_grid or pure_grid")
                           ->check(CLI::IsMember({"bell", "werner_grid", "pure_grid"}));
    auto *pair_opt = measure->add_option("--pair-bloch", o.pair_bloch, "two Bloch vectors for blp: x1 y1 z1 x2 y2 z2")
                         ->expected(6);
    measure->add_option("--trajectory-csv", o.trajectory_csv, "also write the monitored quantity as CSV");

    auto *sweep = app.add_subcommand("sweep", "all measures over a parameter list (CSV)")->fallthrough();
    add_channel_options(sweep, o, false);
    add_state_options(sweep, o);
    sweep->add_option("--param", o.param, "S (dephasing) or lambda-over-gamma0 (damping)")
        ->check(CLI::IsMember({"S", "lambda-over-gamma0"}))
        ->required();
    sweep->add_option("--values", o.values, "comma-separated parameter values")->delimiter(',')->required();
    auto *sweep_family = sweep->add_option("--family", o.family, "QIP family for the N_Q column")
                             ->check(CLI::IsMember({"bell", "werner_grid", "pure_grid"}));
    auto *sweep_pair = sweep->add_option("--pair-bloch", o.pair_bloch, "Bloch vectors for the N_BLP column")->expected(6);

    auto *plot = app.add_subcommand("plot-script", "emit a gnuplot script for figure 1, 2 or 3")->fallthrough();
    plot->add_option("--figure", o.figure, "1: sweep, 2: three Q(t) curves, 3: Q, C, I, |J|/2")
        ->check(CLI::Range(1, 3))
        ->required();
    plot->add_option("--csv", o.csv, "input CSV paths")->expected(1, -1)->required();

    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) {
        args.emplace_back(argv[k]);
    }
    try {
        args = inject_config(app, args);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return e.get_exit_code() == 0 ? app.exit(e, out, err) : (app.exit(e, err, err), kExitConfig);
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    Parsed parsed;
    parsed.grid_points_set = grid_opt->count() > 0;
    parsed.t_max_set = tmax_opt->count() > 0;
    parsed.family_set = family_opt->count() > 0 || sweep_family->count() > 0;
    parsed.pair_set = pair_opt->count() > 0 || sweep_pair->count() > 0;
    parsed.channel_set = !o.channel.empty();

    try {
        if (evolve->parsed()) {
            return cmd_evolve(o, parsed, out);
        }
        if (flow->parsed()) {
            return cmd_qip_flow(o, parsed, out);
        }
        if (measure->parsed()) {
            return cmd_measure(o, parsed, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(o, parsed, out);
        }
        return cmd_plot_script(o, out);
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericalFailure &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace qipflow::cli
