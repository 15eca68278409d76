#include "drpa/bench.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "drpa/dynamics.hpp"
#include "drpa/sampling.hpp"

namespace drpa {

std::string to_string(PlannerVariant variant) {
    switch (variant) {
        case PlannerVariant::mppi: return "mppi";
        case PlannerVariant::log_mppi: return "logmppi";
        case PlannerVariant::drpa: return "drpa";
    }
    return "?";
}

std::optional<InvalidParam> validate_planner(const PlannerConfig& config) {
    if (config.variant == PlannerVariant::drpa && !config.drpa)
        return InvalidParam{"drpa", "drpa variant requires DrpaParams"};
    if (config.variant == PlannerVariant::log_mppi) {
        if (!config.nln)
            return InvalidParam{"nln", "log_mppi variant requires NlnParams"};
        if (config.nln->sigma_v <= 0.0 || config.nln->sigma_omega <= 0.0)
            return InvalidParam{"nln.sigma", "lognormal sigmas must be > 0"};
    }
    // The supervisor constants are validated even for baselines; defaults are
    // always present and harmless there.
    return validate(config.mppi, config.drpa.value_or(DrpaParams{}));
}

TrialResult run_trial(const PlannerConfig& planner, const Scenario& scenario,
                      std::uint64_t seed, ThreadPool* solver_pool) {
    if (auto err = validate_planner(planner))
        throw std::invalid_argument("run_trial: invalid " + err->field + ": " +
                                    err->reason);

    const MppiParams& params = planner.mppi;
    const DrpaParams* drpa =
        planner.variant == PlannerVariant::drpa ? &*planner.drpa : nullptr;
    SamplerConfig sampler;
    if (planner.variant == PlannerVariant::log_mppi) {
        sampler.model = NoiseModel::nln;
        sampler.nln = *planner.nln;
    }

    const int max_cycles =
        static_cast<int>(std::llround(scenario.time_limit / params.dt));

    TrialResult result;
    result.trajectory.reserve(max_cycles);
    SolverWorkspace ws;
    State x = scenario.start;
    ControlSequence u_hat(params.T);  // all-zero initial estimate
    GuidanceMode mode;
    double solve_ms_total = 0.0;

    for (int cycle = 0;; ++cycle) {
        if (distance(x.position(), scenario.target) <= scenario.success_radius) {
            result.success = true;
            result.elapsed = std::min(cycle * params.dt, scenario.time_limit);
            break;
        }
        if (cycle >= max_cycles) {
            result.elapsed = scenario.time_limit;
            break;
        }

        CycleResult res = control_cycle(x, scenario.world, scenario.target, mode, u_hat,
                                        params, drpa, sampler, seed, cycle, ws,
                                        solver_pool);
        solve_ms_total += res.solve_time_ms;
        result.trajectory.push_back({cycle * params.dt, x, res.executed, mode});

        x = step(x, res.executed, params.dt);
        if (res.new_mode != mode) result.mode_events.push_back({cycle, res.new_mode});
        mode = res.new_mode;
        u_hat = std::move(res.next_u_hat);

        if (scenario.world.contains(x.position())) {
            result.collision = true;
            result.elapsed = (cycle + 1) * params.dt;
            break;
        }
    }

    if (!result.trajectory.empty())
        result.mean_cycle_compute_ms =
            solve_ms_total / static_cast<double>(result.trajectory.size());
    return result;
}

Metrics run_suite(const PlannerConfig& planner, SuiteConfig config, int n_scenarios,
                  std::uint64_t base_seed, ThreadPool* trial_pool) {
    std::vector<TrialResult> results(n_scenarios);
    auto body = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            const Scenario scenario = make_random_grid(
                config.grid_n, config.convexity, base_seed + static_cast<std::uint64_t>(i));
            results[i] =
                run_trial(planner, scenario, base_seed ^ static_cast<std::uint64_t>(i));
        }
    };
    if (trial_pool != nullptr && trial_pool->worker_count() > 1) {
        trial_pool->parallel_for(n_scenarios, body);
    } else {
        body(0, n_scenarios);
    }

    Metrics m;
    m.n_trials = n_scenarios;
    int successes = 0;
    double st_sum = 0.0;
    double ct_sum = 0.0;
    std::size_t cycles = 0;
    for (const TrialResult& r : results) {
        if (r.success) {
            ++successes;
            st_sum += r.elapsed;
        }
        ct_sum += r.mean_cycle_compute_ms * static_cast<double>(r.trajectory.size());
        cycles += r.trajectory.size();
    }
    m.sr = n_scenarios > 0 ? 100.0 * successes / n_scenarios : 0.0;
    if (successes > 0) m.st = st_sum / successes;
    if (cycles > 0) m.ct_ms = ct_sum / static_cast<double>(cycles);
    return m;
}

namespace {

nlohmann::json record_to_json(const TrajectoryRecord& rec) {
    nlohmann::json j{{"t", rec.t},           {"x", rec.state.x},
                     {"y", rec.state.y},     {"theta", rec.state.theta},
                     {"v", rec.control.v},   {"omega", rec.control.omega},
                     {"mode", rec.mode.is_detour() ? "detour" : "target"}};
    if (rec.mode.is_detour()) {
        j["p_min"] = {rec.mode.p_min.x, rec.mode.p_min.y};
        j["p_vt"] = {rec.mode.p_vt.x, rec.mode.p_vt.y};
    }
    return j;
}

TrajectoryRecord record_from_json(const nlohmann::json& j) {
    TrajectoryRecord rec;
    rec.t = j.at("t").get<double>();
    rec.state = {j.at("x").get<double>(), j.at("y").get<double>(),
                 j.at("theta").get<double>()};
    rec.control = {j.at("v").get<double>(), j.at("omega").get<double>()};
    if (j.at("mode").get<std::string>() == "detour") {
        rec.mode = GuidanceMode::detour_mode(
            {j.at("p_min").at(0).get<double>(), j.at("p_min").at(1).get<double>()},
            {j.at("p_vt").at(0).get<double>(), j.at("p_vt").at(1).get<double>()});
    }
    return rec;
}

}  // namespace

std::string trajectory_to_jsonl(const std::vector<TrajectoryRecord>& trajectory) {
    std::string out;
    for (const TrajectoryRecord& rec : trajectory) {
        out += record_to_json(rec).dump();
        out += '\n';
    }
    return out;
}

std::vector<TrajectoryRecord> trajectory_from_jsonl(const std::string& text) {
    std::vector<TrajectoryRecord> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(record_from_json(nlohmann::json::parse(line)));
    }
    return records;
}

namespace {

std::string format_st(const std::optional<double>& st) {
    if (!st) return "";
    std::ostringstream out;
    out << *st;
    return out.str();
}

}  // namespace

std::string metrics_to_csv(const std::vector<MetricsRow>& rows) {
    std::ostringstream out;
    out << "planner,horizon,grid,convexity,n,sr,st,ct\n";
    for (const MetricsRow& row : rows) {
        out << row.planner << ',' << row.horizon << ',' << row.grid << ','
            << row.convexity << ',' << row.metrics.n_trials << ',' << row.metrics.sr
            << ',' << format_st(row.metrics.st) << ',' << row.metrics.ct_ms << '\n';
    }
    return out.str();
}

std::string metrics_to_json(const std::vector<MetricsRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const MetricsRow& row : rows) {
        nlohmann::json j{{"planner", row.planner}, {"horizon", row.horizon},
                         {"grid", row.grid},       {"convexity", row.convexity},
                         {"n", row.metrics.n_trials}, {"sr", row.metrics.sr},
                         {"ct", row.metrics.ct_ms}};
        if (row.metrics.st) {
            j["st"] = *row.metrics.st;
        } else {
            j["st"] = nullptr;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::map<std::string, double> parse_config_file(const std::string& text) {
    std::map<std::string, double> config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        config[key] = std::stod(value);
    }
    return config;
}

void apply_config(const std::map<std::string, double>& config, MppiParams& mppi,
                  DrpaParams& drpa, NlnParams& nln) {
    for (const auto& [key, value] : config) {
        if (key == "k") mppi.K = static_cast<int>(value);
        else if (key == "t") mppi.T = static_cast<int>(value);
        else if (key == "lambda") mppi.lambda = value;
        else if (key == "gamma") mppi.gamma = value;
        else if (key == "sigma_v") mppi.sigma_eps.vv = value;
        else if (key == "sigma_omega") mppi.sigma_eps.ww = value;
        else if (key == "dt") mppi.dt = value;
        else if (key == "v_min") mppi.v_bounds.lo = value;
        else if (key == "v_max") mppi.v_bounds.hi = value;
        else if (key == "omega_min") mppi.omega_bounds.lo = value;
        else if (key == "omega_max") mppi.omega_bounds.hi = value;
        else if (key == "w_obst") mppi.w_obst = value;
        else if (key == "w_guidance") mppi.w_guidance = value;
        else if (key == "tau_monitor") drpa.tau_monitor = static_cast<int>(value);
        else if (key == "r_thres") drpa.r_thres = value;
        else if (key == "d_vt") drpa.d_vt = value;
        else if (key == "d_margin") drpa.d_margin = value;
        else if (key == "w_rep") drpa.w_rep = value;
        else if (key == "goal_guard") drpa.goal_guard = value;
        else if (key == "mu_ln_v") nln.mu_v = value;
        else if (key == "mu_ln_omega") nln.mu_omega = value;
        else if (key == "sigma_ln_v") nln.sigma_v = value;
        else if (key == "sigma_ln_omega") nln.sigma_omega = value;
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

}  // namespace drpa
