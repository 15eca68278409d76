#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "drpa/core.hpp"
#include "drpa/parallel.hpp"
#include "drpa/sampling.hpp"
#include "drpa/world.hpp"

namespace drpa {

// Cost-to-go of one noise-perturbed rollout.
struct RolloutResult {
    double cost_to_go = 0.0;
    std::vector<Control> epsilons_used;  // T noise vectors
};

// Normalized importance-sampling weights and the minimum cost-to-go.
struct WeightResult {
    std::vector<double> weights;
    double rho = 0.0;
};

struct SolverOutput {
    ControlSequence optimal_sequence;  // unclamped
    PredictedPath predicted_path;      // propagate(x0, optimal_sequence)
    std::vector<double> weights;       // K, sum to 1
};

struct CycleResult {
    Control executed;            // clamp(optimal_sequence[0]), sent to the robot
    ControlSequence next_u_hat;  // receding-horizon shift of the optimum
    GuidanceMode new_mode;
    SolverOutput output;
    double solve_time_ms = 0.0;  // sampling through control update
};

enum class NoiseModel { gaussian, nln };

struct SamplerConfig {
    NoiseModel model = NoiseModel::gaussian;
    NlnParams nln{};
};

// Reusable per-trial buffers so the control loop does not reallocate the
// noise batch and cost array every cycle.
struct SolverWorkspace {
    NoiseBatch batch;
    std::vector<double> costs;
    std::vector<double> ctrl_coef;  // 2T control-cost coefficients
};

// Simulates x_{tau+1} = F(x_tau, clamp(u_hat_tau + eps_tau)) and accumulates
// the running collision cost on every intermediate state, the terminal cost
// on the last, and gamma * u_hat' Sigma_eps^-1 (u_hat + eps) each step.
// eps holds T interleaved (v, omega) noise values.
RolloutResult rollout_cost(const State& x0, const ControlSequence& u_hat,
                           std::span<const double> eps, const World& world,
                           Vec2 p_target, const GuidanceMode& mode,
                           const MppiParams& params, double w_rep);

// rho = min cost; w_k = exp(-(J_k - rho)/lambda), normalized to sum 1.
WeightResult importance_weights(std::span<const double> costs, double lambda);

// u*_tau = u_hat_tau + sum_k w_k eps_{k,tau}. Unclamped; clamping happens at
// execution and propagation.
ControlSequence update_controls(const ControlSequence& u_hat,
                                std::span<const double> weights,
                                const NoiseBatch& eps, ThreadPool* pool = nullptr);

// Receding-horizon shift: drop the first input, append a zero control.
ControlSequence shift_sequence(const ControlSequence& u_star);

// One full control cycle: sample noise, evaluate K rollouts (parallel,
// order-independent), importance-sample, update and shift the sequence,
// predict the optimal trajectory and advance the guidance mode. Baselines
// pass drpa == nullptr and never leave target-directed guidance.
CycleResult control_cycle(const State& x0, const World& world, Vec2 p_target,
                          const GuidanceMode& mode, const ControlSequence& u_hat,
                          const MppiParams& params, const DrpaParams* drpa,
                          const SamplerConfig& sampler, std::uint64_t trial_seed,
                          int cycle_index, SolverWorkspace& ws,
                          ThreadPool* pool = nullptr);

}  // namespace drpa
