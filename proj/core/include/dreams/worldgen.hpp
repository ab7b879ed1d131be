#pragma once

#include <cstdint>
#include <string>

#include "dreams/grid.hpp"
#include "dreams/roadmap.hpp"

namespace dreams {

enum class WorldKind { Forest, Desert };

std::string to_string(WorldKind kind);
WorldKind world_kind_from_string(const std::string& s);

// Procedural stand-ins for real terrain maps.
//   forest: poisson-disk tree clusters, dense (20-35% occupied)
//   desert: sparse large blobs (3-10% occupied)
// Start/goal margins are kept clear and the returned world always admits
// at least one collision-free start->goal route on the default 2 m
// lattice; generation retries with perturbed seeds until that holds.
// Deterministic for fixed arguments.
// Throws UnsatisfiableWorld when the retry budget is exhausted.
OccupancyGrid generate_world(WorldKind kind, double width_m, double height_m,
                             double resolution, std::uint64_t rng_seed);

inline constexpr double kDefaultVertexSpacing = 2.0;

}  // namespace dreams
