#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dreams/evaluation.hpp"
#include "dreams/planner.hpp"
#include "dreams/sampling.hpp"
#include "dreams/sensing.hpp"

namespace dreams {

enum class Algorithm {
    DreamsFixed,
    DreamsAdaptive,
    Drps,
    SampledAstar,
    Direct,
    Oracle,
};

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

// Mid-edge commitment (one-second replanning): the remainder of the edge
// must still be driven; only its speed is up for decision.
struct CommitPrefix {
    std::uint32_t edge = 0;
    double remaining_m = 0.0;
};

struct StepDecision {
    Plan plan;            // from the decision point (or from the committed edge's end)
    double first_speed = 0.0;  // commanded speed for the immediate motion
    int chosen_profile = 0;
    double proposer_seconds = 0.0;
    double acceptor_seconds = 0.0;
};

// Sample & Plan / Evaluate / Aggregate / Select. Samples params.n_plans
// worlds and plans each with reverse-retry; every (plan, profile)
// candidate is costed against params.n_eval_worlds fresh worlds (seeds
// disjoint from the planning draws), aggregated by inverse CVaR, and the
// minimal aggregate wins (ties: lowest plan index, then lowest profile
// index). `jobs` > 1 parallelizes plan calls and candidate evaluation
// with order-stable results.
// Throws NoPlanFound if every sampled world is goal-unreachable.
StepDecision dreams_step(const PosteriorGrid& posterior, const Roadmap& roadmap,
                         const std::vector<std::uint8_t>& link_observed, PlanState state,
                         const EvalParams& params, std::span<const SpeedProfile> speed_candidates,
                         Rng& rng, const std::optional<CommitPrefix>& prefix = std::nullopt,
                         int jobs = 1);

// Proposer: one world from the posterior. Acceptor: the only plan.
StepDecision drps_step(const PosteriorGrid& posterior, const Roadmap& roadmap,
                       const std::vector<std::uint8_t>& link_observed, PlanState state,
                       const SpeedProfile& profile, Rng& rng);

// Proposer: n_plans worlds. Acceptor: the plan with maximum mean edge
// centrality, where centrality(e) = fraction of proposed plans containing
// e (ties: lowest plan index).
StepDecision sampled_astar_step(const PosteriorGrid& posterior, const Roadmap& roadmap,
                                const std::vector<std::uint8_t>& link_observed, PlanState state,
                                const SpeedProfile& profile, const EvalParams& params, Rng& rng);

// Single deterministic search minimizing the expected evaluation cost:
// edge weight w(e) + P(blocked)*c(e)*tau(e), tau = alpha on edges leaving
// the current vertex, 1 elsewhere. Reverse-retry applies.
StepDecision direct_step(const EdgePosterior& ep, const Roadmap& roadmap,
                         const std::vector<std::uint8_t>& link_observed, PlanState state,
                         const SpeedProfile& profile, const EvalParams& params);

}  // namespace dreams
