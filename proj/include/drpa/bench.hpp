#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drpa/core.hpp"
#include "drpa/parallel.hpp"
#include "drpa/scenario.hpp"
#include "drpa/solver.hpp"

namespace drpa {

enum class PlannerVariant { mppi, log_mppi, drpa };

std::string to_string(PlannerVariant variant);

struct PlannerConfig {
    PlannerVariant variant = PlannerVariant::drpa;
    MppiParams mppi{};
    std::optional<DrpaParams> drpa = DrpaParams{};  // drpa variant only
    std::optional<NlnParams> nln{};                 // log_mppi variant only
};

// Variant-specific parameter presence plus the core invariants.
std::optional<InvalidParam> validate_planner(const PlannerConfig& config);

// One control cycle of an executed trajectory.
struct TrajectoryRecord {
    double t = 0.0;       // s, time of `state`
    State state;          // robot state when the cycle was solved
    Control control;      // executed (clamped) first optimal input
    GuidanceMode mode;    // guidance in effect during this cycle

    bool operator==(const TrajectoryRecord&) const = default;
};

// Guidance switch, recorded when a cycle ends in a different mode.
struct ModeEvent {
    int cycle = 0;
    GuidanceMode mode;  // mode entered
};

struct TrialResult {
    bool success = false;
    double elapsed = 0.0;                // s
    double mean_cycle_compute_ms = 0.0;  // solver portion only
    bool collision = false;
    std::vector<TrajectoryRecord> trajectory;
    std::vector<ModeEvent> mode_events;
};

struct Metrics {
    double sr = 0.0;                // percent
    std::optional<double> st;       // s, mean over successes; absent if none
    double ct_ms = 0.0;             // mean over all cycles of all trials
    int n_trials = 0;
};

struct SuiteConfig {
    int grid_n = 6;
    Convexity convexity = Convexity::non_convex;
};

// Runs the control loop at dt for at most time_limit. Terminates on success
// (distance to target <= success_radius), collision of the executed position
// (failure), or timeout (failure).
TrialResult run_trial(const PlannerConfig& planner, const Scenario& scenario,
                      std::uint64_t seed, ThreadPool* solver_pool = nullptr);

// Generates n scenarios from consecutive seeds (base_seed + i), runs one
// trial each (noise seed base_seed ^ i), and aggregates SR/ST/CT.
// Deterministic in base_seed up to CT, which is a wall-clock measurement.
Metrics run_suite(const PlannerConfig& planner, SuiteConfig config, int n_scenarios,
                  std::uint64_t base_seed, ThreadPool* trial_pool = nullptr);

// JSON-lines trajectory export, one record per cycle. parse(emit(t)) == t.
std::string trajectory_to_jsonl(const std::vector<TrajectoryRecord>& trajectory);
std::vector<TrajectoryRecord> trajectory_from_jsonl(const std::string& text);

// One row of the metrics table.
struct MetricsRow {
    std::string planner;
    int horizon = 0;
    std::string grid;       // "6x6", "10x10", or a scenario name
    std::string convexity;  // "convex" / "nonconvex" / "-"
    Metrics metrics;
};

// CSV with header planner,horizon,grid,convexity,n,sr,st,ct.
std::string metrics_to_csv(const std::vector<MetricsRow>& rows);
std::string metrics_to_json(const std::vector<MetricsRow>& rows);

// Flat key=value parameter file ('#' comments). Unknown keys are rejected.
std::map<std::string, double> parse_config_file(const std::string& text);
void apply_config(const std::map<std::string, double>& config, MppiParams& mppi,
                  DrpaParams& drpa, NlnParams& nln);

}  // namespace drpa
