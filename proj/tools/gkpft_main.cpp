// Command-line front end: squeezing thresholds, error-surface sweeps, the
// exact correction ledger, Monte-Carlo validation, and comb-state profiles.
// JSON goes to stdout, CSV tables to files; exit codes are 0 on success,
// 1 on compute errors, 2 on usage errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gkpft/gkpft.hpp"

namespace {

using gkpft::Json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

Json envelope(const std::string& command, Json params, Json results) {
    return Json{{"schema_version", "1.0"},
                {"command", command},
                {"params", std::move(params)},
                {"results", std::move(results)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

gkpft::GateSpec make_gate(const std::string& name, double a, double b) {
    if (name == "cz") return gkpft::GateSpec::cz();
    return gkpft::GateSpec::single_mode(a, b);
}

struct SqueezingInput {
    double db = 0.0;
    double variance = 0.0;
    bool has_db = false;
    bool has_variance = false;

    gkpft::SqueezingLevel resolve() const {
        if (has_db == has_variance) {
            throw CLI::ValidationError("exactly one of --db or --variance is required");
        }
        return has_db ? gkpft::SqueezingLevel::from_db(db)
                      : gkpft::SqueezingLevel(variance);
    }
};

int run_threshold(const std::string& gate_name, double a, double b, double target) {
    const gkpft::GateSpec gate = make_gate(gate_name, a, b);
    const gkpft::ThresholdResult res = gkpft::solve_threshold(gate, target);
    const auto trace = gkpft::run_single_mode_ledger(
        {gkpft::QuadraticSurd(gkpft::Rational::from_double(gate.a)),
         gkpft::QuadraticSurd(gkpft::Rational::from_double(gate.b))});

    Json results = gkpft::to_json(res);
    results["ledger_final"] = gkpft::to_json(trace.final);
    emit(envelope("threshold",
                  Json{{"gate", gate_name}, {"a", gate.a}, {"b", gate.b}, {"target", target}},
                  std::move(results)));
    return 0;
}

int run_ledger(double a, double b, double peak) {
    const auto trace = gkpft::run_single_mode_ledger(
        {gkpft::QuadraticSurd(gkpft::Rational::from_double(a)),
         gkpft::QuadraticSurd(gkpft::Rational::from_double(b))},
        gkpft::QuadraticSurd(gkpft::Rational::from_double(peak)));
    emit(envelope("ledger", Json{{"a", a}, {"b", b}, {"peak_coeff", peak}},
                  gkpft::to_json(trace)));
    return 0;
}

int run_sweep(const std::vector<double>& db_list, gkpft::AxisRange a_range,
              gkpft::AxisRange b_range, double target, const std::string& out_prefix) {
    std::vector<double> v_list;
    v_list.reserve(db_list.size());
    for (double db : db_list) v_list.push_back(gkpft::variance_from_db(db));

    const gkpft::SweepResult res =
        gkpft::sweep_error_surface(a_range, b_range, v_list, target);

    std::string surface = "a,b,v,p_err\n";
    for (const auto& p : res.surface) {
        surface += fmt_double(p.a) + "," + fmt_double(p.b) + "," + fmt_double(p.v) + "," +
                   fmt_double(p.p_err) + "\n";
    }
    std::string contour = "v,a,b_contour\n";
    for (const auto& p : res.contour) {
        contour += fmt_double(p.v) + "," + fmt_double(p.a) + "," + fmt_double(p.b) + "\n";
    }

    const std::string surface_path = out_prefix + ".surface.csv";
    const std::string contour_path = out_prefix + ".contour.csv";
    write_file(surface_path, surface);
    write_file(contour_path, contour);

    emit(envelope("sweep",
                  Json{{"db", db_list},
                       {"a_min", a_range.min},
                       {"a_max", a_range.max},
                       {"a_steps", a_range.count},
                       {"b_min", b_range.min},
                       {"b_max", b_range.max},
                       {"b_steps", b_range.count},
                       {"target", target},
                       {"out", out_prefix}},
                  Json{{"surface_csv", surface_path},
                       {"contour_csv", contour_path},
                       {"surface_rows", res.surface.size()},
                       {"contour_rows", res.contour.size()}}));
    return 0;
}

int run_montecarlo(const std::string& gate_name, double a, double b,
                   const SqueezingInput& sq, std::uint64_t samples, std::uint64_t seed) {
    gkpft::McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.v = sq.resolve();
    cfg.gate = make_gate(gate_name, a, b);

    const gkpft::McResult res = gkpft::mc_pipeline(cfg);
    Json results = gkpft::to_json(res);
    results["verdict"] = gkpft::mc_verdict_four_sigma(res) ? "pass" : "fail";
    emit(envelope("montecarlo",
                  Json{{"gate", gate_name},
                       {"a", cfg.gate.a},
                       {"b", cfg.gate.b},
                       {"variance", cfg.v.variance},
                       {"db", cfg.v.db()},
                       {"samples", samples},
                       {"seed", seed}},
                  std::move(results)));
    return 0;
}

int run_gkp_profile(const std::string& word_name, double alpha, double delta, double ae,
                    double grid_min, double grid_max, int points,
                    const std::string& out_path) {
    if (points < 2) throw CLI::ValidationError("--points must be at least 2");
    if (!(grid_max > grid_min)) {
        throw CLI::ValidationError("--grid-max must exceed --grid-min");
    }
    gkpft::GkpParams params;
    params.alpha = alpha;
    params.delta_peak = delta;
    params.envelope_ae = ae > 0.0 ? ae : std::sqrt(delta);
    params.validate();
    const gkpft::GkpWord word =
        (word_name == "1" || word_name == "one") ? gkpft::GkpWord::one : gkpft::GkpWord::zero;

    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            grid_min + (grid_max - grid_min) * i / (points - 1);
    }
    const std::vector<double> density = gkpft::gkp_density(params, word, grid);

    std::string csv = "x,density\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv += fmt_double(grid[i]) + "," + fmt_double(density[i]) + "\n";
    }
    write_file(out_path, csv);

    emit(envelope("gkp-profile",
                  Json{{"word", word == gkpft::GkpWord::one ? "one" : "zero"},
                       {"alpha", params.alpha},
                       {"delta", params.delta_peak},
                       {"ae", params.envelope_ae},
                       {"grid_min", grid_min},
                       {"grid_max", grid_max},
                       {"points", points},
                       {"out", out_path}},
                  Json{{"csv", out_path}, {"rows", grid.size()}}));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fault-tolerance analysis of GKP-corrected Gaussian computation"};
    app.require_subcommand(1);

    // threshold
    auto* cmd_threshold = app.add_subcommand("threshold", "solve the squeezing threshold");
    std::string th_gate = "single";
    double th_a = 2.0, th_b = 2.0, th_target = 1e-6;
    cmd_threshold->add_option("--gate", th_gate)->check(CLI::IsMember({"single", "cz"}));
    cmd_threshold->add_option("--a", th_a)->check(CLI::NonNegativeNumber);
    cmd_threshold->add_option("--b", th_b)->check(CLI::NonNegativeNumber);
    cmd_threshold->add_option("--target", th_target)
        ->check(CLI::Range(1e-300, 1.0).description("(0,1)"));

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "error surface and threshold contours");
    std::vector<double> sw_db;
    gkpft::AxisRange sw_a{0.0, 6.0, 61};
    gkpft::AxisRange sw_b{0.0, 6.0, 61};
    double sw_target = 1e-6;
    std::string sw_out = "sweep";
    cmd_sweep->add_option("--db", sw_db, "squeezing levels in dB")->required();
    cmd_sweep->add_option("--a-min", sw_a.min);
    cmd_sweep->add_option("--a-max", sw_a.max);
    cmd_sweep->add_option("--a-steps", sw_a.count)->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--b-min", sw_b.min);
    cmd_sweep->add_option("--b-max", sw_b.max);
    cmd_sweep->add_option("--b-steps", sw_b.count)->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--target", sw_target);
    cmd_sweep->add_option("--out", sw_out, "output prefix for the two CSV files");

    // ledger
    auto* cmd_ledger = app.add_subcommand("ledger", "exact correction variance ledger");
    double lg_a = 2.0, lg_b = 2.0, lg_peak = 1.0;
    cmd_ledger->add_option("--a", lg_a)->check(CLI::NonNegativeNumber);
    cmd_ledger->add_option("--b", lg_b)->check(CLI::NonNegativeNumber);
    cmd_ledger->add_option("--peak", lg_peak)->check(CLI::NonNegativeNumber);

    // montecarlo
    auto* cmd_mc = app.add_subcommand("montecarlo", "sampling validation of the pipeline");
    std::string mc_gate = "single";
    double mc_a = 2.0, mc_b = 2.0;
    SqueezingInput mc_sq;
    std::uint64_t mc_samples = 1000000, mc_seed = 1;
    cmd_mc->add_option("--gate", mc_gate)->check(CLI::IsMember({"single", "cz"}));
    cmd_mc->add_option("--a", mc_a)->check(CLI::NonNegativeNumber);
    cmd_mc->add_option("--b", mc_b)->check(CLI::NonNegativeNumber);
    auto* mc_db_opt = cmd_mc->add_option("--db", mc_sq.db, "squeezing in dB");
    auto* mc_var_opt =
        cmd_mc->add_option("--variance", mc_sq.variance, "squeezing variance");
    mc_db_opt->excludes(mc_var_opt);
    mc_var_opt->excludes(mc_db_opt);
    cmd_mc->add_option("--samples", mc_samples)->check(CLI::PositiveNumber);
    cmd_mc->add_option("--seed", mc_seed);

    // gkp-profile
    auto* cmd_profile = app.add_subcommand("gkp-profile", "comb-state density CSV");
    std::string gp_word = "zero";
    double gp_alpha = gkpft::kSqrtPi, gp_delta = 0.01, gp_ae = -1.0;
    double gp_min = -8.0, gp_max = 8.0;
    int gp_points = 2001;
    std::string gp_out = "gkp_profile.csv";
    cmd_profile->add_option("--word", gp_word)->check(CLI::IsMember({"0", "1", "zero", "one"}));
    cmd_profile->add_option("--alpha", gp_alpha)->check(CLI::PositiveNumber);
    cmd_profile->add_option("--delta", gp_delta)->check(CLI::PositiveNumber);
    cmd_profile->add_option("--ae", gp_ae, "envelope parameter, default sqrt(delta)");
    cmd_profile->add_option("--grid-min", gp_min);
    cmd_profile->add_option("--grid-max", gp_max);
    cmd_profile->add_option("--points", gp_points);
    cmd_profile->add_option("--out", gp_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_threshold->parsed()) return run_threshold(th_gate, th_a, th_b, th_target);
        if (cmd_sweep->parsed()) return run_sweep(sw_db, sw_a, sw_b, sw_target, sw_out);
        if (cmd_ledger->parsed()) return run_ledger(lg_a, lg_b, lg_peak);
        if (cmd_mc->parsed()) {
            mc_sq.has_db = mc_db_opt->count() > 0;
            mc_sq.has_variance = mc_var_opt->count() > 0;
            return run_montecarlo(mc_gate, mc_a, mc_b, mc_sq, mc_samples, mc_seed);
        }
        if (cmd_profile->parsed()) {
            return run_gkp_profile(gp_word, gp_alpha, gp_delta, gp_ae, gp_min, gp_max,
                                   gp_points, gp_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
