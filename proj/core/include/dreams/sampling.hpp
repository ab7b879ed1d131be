#pragma once

#include <cstdint>
#include <vector>

#include "dreams/grid.hpp"
#include "dreams/rng.hpp"
#include "dreams/roadmap.hpp"

namespace dreams {

// Per-link probability that the ground is blocked: the maximum posterior
// occupancy across the swept-volume footprint.
struct EdgePosterior {
    std::vector<double> block_prob;  // indexed by link id

    double edge_block_prob(const Roadmap& rm, std::uint32_t e) const {
        return block_prob[rm.edges[e].link];
    }
};

EdgePosterior edge_posterior(const PosteriorGrid& posterior, const Roadmap& roadmap);

// One determinized world: each link independently blocked with its
// posterior probability. Forward/reverse twins share the draw by
// construction (status lives on the link).
struct SampledWorld {
    std::vector<std::uint8_t> link_free;  // 1 = free
    std::uint64_t seed = 0;

    bool edge_free(const Roadmap& rm, std::uint32_t e) const {
        return link_free[rm.edges[e].link] != 0;
    }
};

// Stateless per-link draw; sample_world materializes exactly these bits,
// so partial evaluation over a subset of links matches the full world.
inline bool link_blocked_draw(const EdgePosterior& ep, std::uint64_t world_seed,
                              std::uint32_t link) {
    return unit_double(mix64(world_seed, link)) < ep.block_prob[link];
}

SampledWorld sample_world(const EdgePosterior& ep, std::uint64_t seed);

// n worlds with seeds base_seed + i; order-stable.
std::vector<SampledWorld> sample_worlds(const EdgePosterior& ep, int n,
                                        std::uint64_t base_seed);

}  // namespace dreams
