#pragma once

#include <span>
#include <vector>

#include "dreams/planner.hpp"
#include "dreams/sampling.hpp"

namespace dreams {

struct EvalParams {
    double alpha = 10.0;         // collision factor, >= 1
    double cvar_fraction = 0.75; // best fraction of costs kept
    int n_eval_worlds = 10000;
    int n_plans = 100;
};

struct CostBreakdown {
    double traversal_time = 0.0;  // T, seconds
    double collision_cost = 0.0;  // C, seconds-equivalent
    double total() const { return traversal_time + collision_cost; }
};

// Receding-horizon evaluation cost of a plan on one determinized world:
//   J^(xi) = sum w(e) + sum 1(blocked) * c(e) * tau(e)
// with c(e) = the plan's speed on e and tau = alpha on the first edge,
// 1 on every later edge.
double evaluate_plan(const Roadmap& roadmap, const Plan& plan, const SampledWorld& world,
                     const EvalParams& params);

// Mean of the best (lowest) ceil(fraction*n) costs. Throws on empty input.
double inverse_cvar(std::span<const double> costs, double fraction);

}  // namespace dreams
