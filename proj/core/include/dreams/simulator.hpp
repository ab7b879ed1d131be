#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dreams/evaluation.hpp"
#include "dreams/policies.hpp"
#include "dreams/roadmap.hpp"
#include "dreams/sensing.hpp"

namespace dreams {

struct RobotState {
    std::uint32_t vertex = 0;
    std::uint8_t heading = 0;
    double sim_time = 0.0;
};

// One record per policy invocation. For one-edge policies this is one
// whole edge; DREAMS-Adaptive logs up-to-one-second motion quanta and
// sets edge_completed on the quantum that finishes the edge.
struct StepRecord {
    std::uint32_t edge = 0;
    bool reverse = false;
    double speed = 0.0;     // commanded during this motion
    double duration = 0.0;  // seconds
    bool edge_completed = false;
    bool collision = false;  // blocked edge finished on this record
    double chosen_speed = 0.0;
    std::vector<std::uint32_t> plan_edges;  // accepted plan at this step
};

struct EpisodeLog {
    std::vector<StepRecord> steps;
    std::uint64_t observation_count = 0;
    CostBreakdown cost;
    double oracle_time = 0.0;
    double suboptimality = 0.0;
    std::uint32_t collisions = 0;
    std::uint32_t policy_invocations = 0;
    bool timed_out = false;
    bool reached_goal = false;
};

// Wall-clock accounting, kept out of EpisodeLog so replays are bit-exact.
struct EpisodeTiming {
    double proposer_seconds = 0.0;
    double acceptor_seconds = 0.0;
};

struct EpisodeResult {
    EpisodeLog log;
    EpisodeTiming timing;
};

struct RunOptions {
    // Policy-invocation cap = ceil(step_cap_factor * |V|).
    double step_cap_factor = 10.0;
    int policy_jobs = 1;  // intra-step parallelism for multi-sample policies
};

// Closed-loop episode: sense and update the posterior (1 Hz during
// motion), invoke the policy, execute one edge (or one second for
// DREAMS-Adaptive), account costs, reveal traversed ground, repeat until
// the goal or the step cap. A blocked edge costs alpha * commanded speed
// once per distinct traversal; the robot passes through.
EpisodeResult run_episode(const WorldTruth& truth, const Roadmap& roadmap,
                          Algorithm algorithm, const NoiseModel& noise,
                          const EvalParams& params, std::uint64_t seed,
                          const RunOptions& options = {});

// (T + C) / oracle_time. Throws Error when oracle_time <= 0 (start=goal).
double suboptimality(const EpisodeLog& log, double oracle_time);

// Deterministic JSON-lines serialization: one record per step plus a
// trailing summary record. Identical seeds produce identical bytes.
std::string serialize_episode_log(const EpisodeLog& log);

}  // namespace dreams
