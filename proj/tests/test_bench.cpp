#include <doctest.h>

#include <cmath>

#include "drpa/bench.hpp"
#include "drpa/dynamics.hpp"

using namespace drpa;

namespace {

PlannerConfig small_drpa(int K = 512, int T = 50) {
    PlannerConfig config;
    config.variant = PlannerVariant::drpa;
    config.mppi.K = K;
    config.mppi.T = T;
    return config;
}

Scenario open_run_scenario() {
    // Empty world, target 5 m ahead.
    Scenario s;
    s.world = World({}, Rect{{-20, -20}, {20, 20}});
    s.start = {0, 0, 0};
    s.target = {5, 0};
    return s;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("validate_planner enforces variant-specific parameters") {
    PlannerConfig log_mppi;
    log_mppi.variant = PlannerVariant::log_mppi;
    log_mppi.nln.reset();
    auto err = validate_planner(log_mppi);
    REQUIRE(err.has_value());
    CHECK(err->field == "nln");

    PlannerConfig drpa_missing;
    drpa_missing.variant = PlannerVariant::drpa;
    drpa_missing.drpa.reset();
    auto err2 = validate_planner(drpa_missing);
    REQUIRE(err2.has_value());
    CHECK(err2->field == "drpa");

    CHECK(!validate_planner(small_drpa()).has_value());
}

TEST_CASE("an open-field trial succeeds quickly") {
    const Scenario scenario = open_run_scenario();
    // Monte-Carlo smoke test across seeds; straight-line time is 2.5 s at v_max.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const TrialResult r = run_trial(small_drpa(1024), scenario, seed);
        CHECK(r.success);
        CHECK(!r.collision);
        CHECK(r.elapsed < 10.0);
        CHECK(r.elapsed <= scenario.time_limit);
    }
}

TEST_CASE("success implies the final state is within the radius") {
    const Scenario scenario = open_run_scenario();
    const TrialResult r = run_trial(small_drpa(512), scenario, 3);
    REQUIRE(r.success);
    REQUIRE(!r.trajectory.empty());
    // Replay the executed trajectory: last recorded state stepped by the last
    // control must land within the success radius.
    const TrajectoryRecord& last = r.trajectory.back();
    MppiParams params = small_drpa().mppi;
    const State final_state = step(last.state, last.control, params.dt);
    CHECK(distance(final_state.position(), scenario.target) <= scenario.success_radius);
}

TEST_CASE("an all-failure suite reports sr 0 with st absent and ct present") {
    PlannerConfig crippled = small_drpa(16, 10);
    crippled.mppi.v_bounds = {-1e-4, 1e-4};  // cannot cover the 36 m traverse
    const Metrics m = run_suite(crippled, SuiteConfig{6, Convexity::convex}, 3, 1);
    CHECK(m.n_trials == 3);
    CHECK(m.sr == 0.0);
    CHECK(!m.st.has_value());
    CHECK(m.ct_ms > 0.0);
}

TEST_CASE("suite metrics are deterministic and parallelism independent") {
    PlannerConfig planner = small_drpa(64, 20);
    const SuiteConfig suite{6, Convexity::convex};
    const Metrics a = run_suite(planner, suite, 6, 11);
    const Metrics b = run_suite(planner, suite, 6, 11);
    CHECK(a.sr == b.sr);
    CHECK(a.st.has_value() == b.st.has_value());
    if (a.st) CHECK(*a.st == doctest::Approx(*b.st).epsilon(1e-12));

    ThreadPool pool(3);
    const Metrics c = run_suite(planner, suite, 6, 11, &pool);
    CHECK(c.sr == a.sr);
    if (a.st) CHECK(*c.st == doctest::Approx(*a.st).epsilon(1e-12));
}

TEST_CASE("trajectory export round-trips exactly") {
    const Scenario scenario = open_run_scenario();
    PlannerConfig planner = small_drpa(128, 20);
    const TrialResult r = run_trial(planner, scenario, 5);
    REQUIRE(!r.trajectory.empty());
    const auto parsed = trajectory_from_jsonl(trajectory_to_jsonl(r.trajectory));
    REQUIRE(parsed.size() == r.trajectory.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i] == r.trajectory[i]);  // bitwise, including mode payload
    }
}

TEST_CASE("metrics table formatting") {
    Metrics with_st{97.5, 22.4, 17.3, 1000};
    Metrics without_st{0.0, std::nullopt, 16.4, 10};
    const std::string csv = metrics_to_csv({{"drpa", 50, "6x6", "nonconvex", with_st},
                                            {"mppi", 50, "6x6", "nonconvex", without_st}});
    CHECK(csv.find("planner,horizon,grid,convexity,n,sr,st,ct") == 0);
    CHECK(csv.find("drpa,50,6x6,nonconvex,1000,97.5,22.4,17.3") != std::string::npos);
    CHECK(csv.find("mppi,50,6x6,nonconvex,10,0,,16.4") != std::string::npos);

    const std::string json = metrics_to_json({{"mppi", 50, "6x6", "convex", without_st}});
    CHECK(json.find("\"st\": null") != std::string::npos);
}

TEST_CASE("config files parse and apply") {
    const std::string text =
        "# solver\n"
        "k = 2048\n"
        "lambda = 5.0  # sharper\n"
        "w_rep=0.5\n"
        "sigma_ln_v = 0.2\n";
    MppiParams mppi;
    DrpaParams drpa;
    NlnParams nln;
    apply_config(parse_config_file(text), mppi, drpa, nln);
    CHECK(mppi.K == 2048);
    CHECK(mppi.lambda == 5.0);
    CHECK(drpa.w_rep == 0.5);
    CHECK(nln.sigma_v == 0.2);

    CHECK_THROWS(parse_config_file("what is this"));
    CHECK_THROWS(apply_config(parse_config_file("bogus_key = 1\n"), mppi, drpa, nln));
}

}  // TEST_SUITE
