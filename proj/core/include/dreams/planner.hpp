#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dreams/roadmap.hpp"
#include "dreams/sampling.hpp"

namespace dreams {

inline constexpr double kMaxSpeed = 10.0;      // also the oracle speed
inline constexpr double kReverseSpeed = 1.0;   // fixed

// Speeds assigned to plan edges. All within [1, 10] m/s; reversing is
// always 1 m/s regardless of profile.
struct SpeedProfile {
    double observed_speed = 5.0;    // edges whose footprint has been fully observed
    double unobserved_speed = 10.0; // optimistic elsewhere
    double first_edge_speed = 5.0;  // overrides the plan's first forward edge
    double reverse_speed = kReverseSpeed;
};

SpeedProfile fixed_profile();
// Five profiles differing only in first-edge speed: 1, 3, 5, 7, 10 m/s.
std::vector<SpeedProfile> adaptive_profiles();

// Search state: where the robot is and which way its nose points.
struct PlanState {
    std::uint32_t vertex = 0;
    std::uint8_t heading = 0;
};

// From a state, an outgoing forward edge is usable when its direction is
// within 45 degrees of the heading; the reverse twin covers every other
// direction (nose stays opposite the travel direction).
bool edge_usable_from(const Edge& e, int heading);
int heading_after(const Edge& e);

double edge_speed(const Edge& e, const SpeedProfile& profile,
                  const std::vector<std::uint8_t>& link_observed, bool first_edge);

struct Plan {
    std::vector<std::uint32_t> edges;   // head-to-tail, ends at goal
    std::vector<double> speeds;         // m/s per edge
    std::optional<std::uint64_t> source_seed;  // sampled world, or nullopt for direct
    bool used_reverse_retry = false;

    bool empty() const { return edges.empty(); }
    double total_time(const Roadmap& rm) const;
};

// Minimum-total-time A* over free edges of the determinized world.
// Heuristic: euclidean distance / 10 m/s (admissible for every profile).
// Deterministic tie-breaking: expansion by (f, vertex, heading), edges
// relaxed in ascending id order. nullopt when the goal is unreachable.
std::optional<Plan> plan_astar(const SampledWorld& world, const Roadmap& roadmap,
                               PlanState start_state, const SpeedProfile& profile,
                               bool allow_reverse,
                               const std::vector<std::uint8_t>& link_observed);

// First attempt forbids reversing; on failure retries with reverse edges
// allowed at 1 m/s. The result records which attempt succeeded.
std::optional<Plan> plan_with_reverse_retry(const SampledWorld& world, const Roadmap& roadmap,
                                            PlanState start_state, const SpeedProfile& profile,
                                            const std::vector<std::uint8_t>& link_observed);

// Full-information reference: shortest route over truly-free links at a
// uniform 10 m/s, ignoring heading constraints.
struct OraclePlan {
    std::vector<std::uint32_t> links;  // traversal order
    std::vector<std::uint32_t> vertices;  // start ... goal
    double time = 0.0;
};

// Throws Error if the goal is unreachable (world generation guarantees it
// is not).
OraclePlan oracle_plan(const WorldTruth& truth, const Roadmap& roadmap,
                       std::uint32_t start, std::uint32_t goal);

}  // namespace dreams
