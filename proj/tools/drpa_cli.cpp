// Command-line front end: single-trial simulation with trajectory export,
// metrics suites over random scenario sets, scenario generation, and the
// guidance-function certification suites.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "drpa/bench.hpp"
#include "drpa/certify.hpp"
#include "drpa/parallel.hpp"

namespace {

struct CommonOpts {
    std::string planner = "drpa";
    int horizon = 50;
    int k = 0;  // 0 = keep default
    std::uint64_t seed = 1;
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--planner", opts.planner, "Planner variant")
        ->check(CLI::IsMember({"mppi", "logmppi", "drpa"}));
    cmd->add_option("--horizon", opts.horizon, "Prediction horizon steps");
    cmd->add_option("--k", opts.k, "Rollouts per cycle");
    cmd->add_option("--seed", opts.seed, "Base seed");
    cmd->add_option("--config", opts.config_path, "key=value parameter file");
}

drpa::PlannerConfig build_planner(const CommonOpts& opts) {
    drpa::PlannerConfig config;
    if (opts.planner == "mppi") {
        config.variant = drpa::PlannerVariant::mppi;
    } else if (opts.planner == "logmppi") {
        config.variant = drpa::PlannerVariant::log_mppi;
        config.nln = drpa::NlnParams{};
    } else {
        config.variant = drpa::PlannerVariant::drpa;
    }
    drpa::DrpaParams drpa_params = config.drpa.value_or(drpa::DrpaParams{});
    drpa::NlnParams nln_params = config.nln.value_or(drpa::NlnParams{});
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw CLI::ValidationError("--config", "cannot open " + opts.config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        drpa::apply_config(drpa::parse_config_file(buffer.str()), config.mppi,
                           drpa_params, nln_params);
    }
    config.mppi.T = opts.horizon;
    if (opts.k > 0) config.mppi.K = opts.k;
    config.drpa = drpa_params;
    if (config.variant == drpa::PlannerVariant::log_mppi) config.nln = nln_params;
    if (auto err = drpa::validate_planner(config))
        throw CLI::ValidationError(err->field, err->reason);
    return config;
}

drpa::Convexity parse_convexity(const std::string& s) {
    return s == "convex" ? drpa::Convexity::convex : drpa::Convexity::non_convex;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DRPA-MPPI navigation benchmark"};
    app.require_subcommand(1);

    // --- simulate ---
    CommonOpts sim_opts;
    std::string sim_scenario = "ushape";
    std::uint64_t sim_scenario_seed = 1;
    int sim_grid = 0;
    std::string sim_convexity = "nonconvex";
    std::string sim_out;
    auto* sim = app.add_subcommand("simulate", "Run one trial and export the trajectory");
    add_common(sim, sim_opts);
    sim->add_option("--scenario", sim_scenario,
                    "shortrect|longrect|ushape or a scenario JSON file");
    sim->add_option("--grid", sim_grid, "Use a random grid scenario instead (6 or 10)");
    sim->add_option("--convexity", sim_convexity, "Grid convexity")
        ->check(CLI::IsMember({"convex", "nonconvex"}));
    sim->add_option("--scenario-seed", sim_scenario_seed, "Seed of the grid scenario");
    sim->add_option("--out", sim_out, "Trajectory JSONL path (default stdout)");

    // --- bench ---
    CommonOpts bench_opts;
    int bench_grid = 6;
    std::string bench_convexity = "nonconvex";
    int bench_n = 100;
    std::string bench_out;
    std::string bench_format = "csv";
    auto* bench = app.add_subcommand("bench", "Run a scenario suite and report SR/ST/CT");
    add_common(bench, bench_opts);
    bench->add_option("--grid", bench_grid, "Grid resolution")->check(CLI::IsMember({6, 10}));
    bench->add_option("--convexity", bench_convexity, "Obstacle convexity")
        ->check(CLI::IsMember({"convex", "nonconvex"}));
    bench->add_option("--n", bench_n, "Number of scenarios");
    bench->add_option("--out", bench_out, "Output path (default stdout)");
    bench->add_option("--format", bench_format, "Table format")
        ->check(CLI::IsMember({"csv", "json"}));

    // --- gen-scenarios ---
    int gen_grid = 6;
    std::string gen_convexity = "nonconvex";
    int gen_n = 100;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "scenarios";
    auto* gen = app.add_subcommand("gen-scenarios", "Write scenario JSON files");
    gen->add_option("--grid", gen_grid, "Grid resolution")->check(CLI::IsMember({6, 10}));
    gen->add_option("--convexity", gen_convexity, "Obstacle convexity")
        ->check(CLI::IsMember({"convex", "nonconvex"}));
    gen->add_option("--n", gen_n, "Number of scenarios");
    gen->add_option("--seed", gen_seed, "First scenario seed");
    gen->add_option("--out", gen_out, "Output directory")->required();

    // --- certify ---
    std::uint64_t cert_seed = 2024;
    auto* cert = app.add_subcommand("certify", "Run the guidance-function property suites");
    cert->add_option("--seed", cert_seed, "Suite seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const drpa::PlannerConfig planner = build_planner(sim_opts);
            drpa::Scenario scenario;
            if (sim_grid > 0) {
                scenario = drpa::make_random_grid(sim_grid, parse_convexity(sim_convexity),
                                                  sim_scenario_seed);
            } else if (sim_scenario == "shortrect") {
                scenario = drpa::make_qualitative(drpa::QualitativeKind::short_rect);
            } else if (sim_scenario == "longrect") {
                scenario = drpa::make_qualitative(drpa::QualitativeKind::long_rect);
            } else if (sim_scenario == "ushape") {
                scenario = drpa::make_qualitative(drpa::QualitativeKind::u_shape);
            } else {
                std::ifstream in(sim_scenario);
                if (!in) throw std::runtime_error("cannot open scenario " + sim_scenario);
                std::stringstream buffer;
                buffer << in.rdbuf();
                scenario = drpa::scenario_from_json_string(buffer.str());
            }
            drpa::ThreadPool pool(drpa::default_worker_count());
            const drpa::TrialResult result =
                drpa::run_trial(planner, scenario, sim_opts.seed, &pool);
            write_output(sim_out, drpa::trajectory_to_jsonl(result.trajectory));
            std::cerr << (result.success ? "success" : (result.collision ? "collision" : "timeout"))
                      << " elapsed=" << result.elapsed << "s"
                      << " cycles=" << result.trajectory.size()
                      << " mode_switches=" << result.mode_events.size()
                      << " ct=" << result.mean_cycle_compute_ms << "ms\n";
            return result.success ? 0 : 2;
        }

        if (bench->parsed()) {
            const drpa::PlannerConfig planner = build_planner(bench_opts);
            drpa::ThreadPool pool(drpa::default_worker_count());
            const drpa::SuiteConfig suite{bench_grid, parse_convexity(bench_convexity)};
            const drpa::Metrics metrics =
                drpa::run_suite(planner, suite, bench_n, bench_opts.seed, &pool);
            const drpa::MetricsRow row{drpa::to_string(planner.variant),
                                       planner.mppi.T,
                                       std::to_string(bench_grid) + "x" + std::to_string(bench_grid),
                                       bench_convexity, metrics};
            write_output(bench_out, bench_format == "json" ? drpa::metrics_to_json({row})
                                                           : drpa::metrics_to_csv({row}));
            return 0;
        }

        if (gen->parsed()) {
            std::filesystem::create_directories(gen_out);
            for (int i = 0; i < gen_n; ++i) {
                const drpa::Scenario scenario = drpa::make_random_grid(
                    gen_grid, parse_convexity(gen_convexity), gen_seed + i);
                char name[64];
                std::snprintf(name, sizeof(name), "scenario_%06d.json", i);
                std::ofstream out(std::filesystem::path(gen_out) / name);
                out << drpa::scenario_to_json_string(scenario, 2) << '\n';
            }
            std::cerr << "wrote " << gen_n << " scenarios to " << gen_out << "\n";
            return 0;
        }

        if (cert->parsed()) {
            bool all_pass = true;
            const auto report = [&](const char* name, const drpa::CertifyReport& r) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << ": " << r.detail
                          << "\n";
                all_pass = all_pass && r.pass;
            };
            report("detour minimum (Property 1)",
                   drpa::certify_detour_minimum(20, 10000, cert_seed));
            report("repulsion boundary (Property 2)",
                   drpa::certify_repulsion_boundary(20, cert_seed));
            report("gradient vs finite differences",
                   drpa::certify_gradient(20, 1000, cert_seed));
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
