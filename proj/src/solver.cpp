#include "drpa/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "drpa/dynamics.hpp"
#include "drpa/guidance.hpp"
#include "drpa/supervisor.hpp"

namespace drpa {

namespace {

struct CostModel {
    const World* world;
    Vec2 target;
    GuidanceMode mode;
    double w_obst;
    double w_guidance;
    double w_rep;

    double terminal(Vec2 p) const {
        double guidance;
        if (mode.is_detour()) {
            guidance = (mode.p_vt - p).norm() - w_rep * (mode.p_min - p).norm();
        } else {
            guidance = (target - p).norm();
        }
        return (world->contains(p) ? w_obst : 0.0) + w_guidance * guidance;
    }
};

// gamma * u_hat_tau' Sigma_eps^-1, flattened to 2T coefficients.
void fill_ctrl_coef(const ControlSequence& u_hat, const MppiParams& params,
                    std::vector<double>& coef) {
    const int T = static_cast<int>(u_hat.size());
    coef.resize(2 * static_cast<std::size_t>(T));
    const double gv = params.gamma / params.sigma_eps.vv;
    const double gw = params.gamma / params.sigma_eps.ww;
    for (int t = 0; t < T; ++t) {
        coef[2 * t] = gv * u_hat[t].v;
        coef[2 * t + 1] = gw * u_hat[t].omega;
    }
}

// Shared by the batch loop and the public single-rollout op so both follow
// the exact same accumulation order.
double rollout_cost_core(const State& x0, const ControlSequence& u_hat,
                         const double* eps, const double* coef,
                         const MppiParams& params, const CostModel& cm) {
    const int T = static_cast<int>(u_hat.size());
    const double dt = params.dt;
    double J = 0.0;
    double x = x0.x, y = x0.y, theta = x0.theta;
    for (int t = 0; t < T; ++t) {
        const double ev = eps[2 * t];
        const double ew = eps[2 * t + 1];
        const double vv = u_hat[t].v + ev;
        const double vw = u_hat[t].omega + ew;
        // Exploration runs the raw perturbed input through the model; only
        // executed commands and the carried plan are held to the actuator
        // bounds. Clamping here starves the sampler of reachable detours.
        x += vv * std::cos(theta) * dt;
        y += vv * std::sin(theta) * dt;
        theta = wrap_angle(theta + vw * dt);
        if (t == T - 1) {
            J += cm.terminal({x, y});
        } else {
            if (cm.world->contains({x, y})) J += cm.w_obst;
        }
        J += coef[2 * t] * vv + coef[2 * t + 1] * vw;
    }
    return J;
}

void compute_rollout_costs(const State& x0, const ControlSequence& u_hat,
                           const NoiseBatch& batch, const CostModel& cm,
                           const MppiParams& params, const std::vector<double>& coef,
                           std::vector<double>& costs, ThreadPool* pool) {
    costs.resize(batch.K);
    auto body = [&](std::int64_t kb, std::int64_t ke) {
        for (std::int64_t k = kb; k < ke; ++k) {
            costs[k] = rollout_cost_core(x0, u_hat, batch.row(static_cast<int>(k)),
                                         coef.data(), params, cm);
        }
    };
    if (pool != nullptr && pool->worker_count() > 1) {
        pool->parallel_for(batch.K, body);
    } else {
        body(0, batch.K);
    }
}

}  // namespace

RolloutResult rollout_cost(const State& x0, const ControlSequence& u_hat,
                           std::span<const double> eps, const World& world,
                           Vec2 p_target, const GuidanceMode& mode,
                           const MppiParams& params, double w_rep) {
    const CostModel cm{&world, p_target, mode, params.w_obst, params.w_guidance, w_rep};
    std::vector<double> coef;
    fill_ctrl_coef(u_hat, params, coef);
    RolloutResult result;
    result.cost_to_go = rollout_cost_core(x0, u_hat, eps.data(), coef.data(), params, cm);
    result.epsilons_used.reserve(u_hat.size());
    for (std::size_t t = 0; t < u_hat.size(); ++t) {
        result.epsilons_used.push_back({eps[2 * t], eps[2 * t + 1]});
    }
    return result;
}

WeightResult importance_weights(std::span<const double> costs, double lambda) {
    WeightResult result;
    result.rho = *std::min_element(costs.begin(), costs.end());
    result.weights.resize(costs.size());
    double eta = 0.0;
    for (std::size_t k = 0; k < costs.size(); ++k) {
        const double w = std::exp(-(costs[k] - result.rho) / lambda);
        result.weights[k] = w;
        eta += w;
    }
    for (double& w : result.weights) w /= eta;
    return result;
}

ControlSequence update_controls(const ControlSequence& u_hat,
                                std::span<const double> weights,
                                const NoiseBatch& eps, ThreadPool* pool) {
    const int T = static_cast<int>(u_hat.size());
    const int K = eps.K;
    ControlSequence u_star(u_hat.begin(), u_hat.end());
    // Each horizon slot sums its K contributions in fixed k order, so the
    // result does not depend on how slots are distributed over workers.
    auto body = [&](std::int64_t tb, std::int64_t te) {
        for (std::int64_t t = tb; t < te; ++t) {
            double dv = 0.0, dw = 0.0;
            const double* col = eps.data.data() + 2 * t;
            const std::size_t stride = 2 * static_cast<std::size_t>(T);
            for (int k = 0; k < K; ++k, col += stride) {
                dv += weights[k] * col[0];
                dw += weights[k] * col[1];
            }
            u_star[t].v += dv;
            u_star[t].omega += dw;
        }
    };
    if (pool != nullptr && pool->worker_count() > 1) {
        pool->parallel_for(T, body);
    } else {
        body(0, T);
    }
    return u_star;
}

ControlSequence shift_sequence(const ControlSequence& u_star) {
    ControlSequence shifted(u_star.size());
    std::copy(u_star.begin() + 1, u_star.end(), shifted.begin());
    shifted.back() = Control{};
    return shifted;
}

CycleResult control_cycle(const State& x0, const World& world, Vec2 p_target,
                          const GuidanceMode& mode, const ControlSequence& u_hat,
                          const MppiParams& params, const DrpaParams* drpa,
                          const SamplerConfig& sampler, std::uint64_t trial_seed,
                          int cycle_index, SolverWorkspace& ws, ThreadPool* pool) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    const std::uint64_t noise_seed =
        rng::draw(trial_seed, static_cast<std::uint64_t>(cycle_index));
    if (sampler.model == NoiseModel::nln) {
        sample_nln_into(ws.batch, params.K, params.T, params.sigma_eps, sampler.nln,
                        noise_seed);
    } else {
        sample_gaussian_into(ws.batch, params.K, params.T, params.sigma_eps, noise_seed);
    }

    const double w_rep = drpa != nullptr ? drpa->w_rep : 0.0;
    const CostModel cm{&world, p_target, mode, params.w_obst, params.w_guidance, w_rep};
    fill_ctrl_coef(u_hat, params, ws.ctrl_coef);
    compute_rollout_costs(x0, u_hat, ws.batch, cm, params, ws.ctrl_coef, ws.costs, pool);

    WeightResult wres = importance_weights(ws.costs, params.lambda);
    ControlSequence u_star = update_controls(u_hat, wres.weights, ws.batch, pool);

    const auto t1 = clock::now();

    CycleResult result;
    result.executed = clamp_control(u_star.front(), params);
    // The carried-over estimate is an executable plan: clamp it to the
    // actuator bounds so sampling keeps two-sided exploration at cruise.
    ControlSequence feasible(u_star.size());
    for (std::size_t t = 0; t < u_star.size(); ++t)
        feasible[t] = clamp_control(u_star[t], params);
    result.next_u_hat = shift_sequence(feasible);
    result.output.predicted_path = propagate(x0, u_star, params);
    result.new_mode = drpa != nullptr
                          ? advance_mode(mode, result.output.predicted_path,
                                         x0.position(), p_target, *drpa)
                          : mode;
    result.output.optimal_sequence = std::move(u_star);
    result.output.weights = std::move(wres.weights);
    result.solve_time_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

}  // namespace drpa
