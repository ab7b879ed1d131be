#pragma once

#include <cstdint>
#include <string>

#include "dreams/grid.hpp"

namespace dreams {

// Sidecar metadata stored next to each grid file.
struct GridMeta {
    double resolution_m = 0.0;
    std::uint32_t start_vertex = 0;
    std::uint32_t goal_vertex = 0;
    std::string generator;  // "forest", "desert", ...
    std::uint64_t seed = 0;
};

// Binary PGM (P5, maxval 1) plus "<path>.json" sidecar. Round-trips
// bit-exactly.
void save_grid(const OccupancyGrid& grid, const GridMeta& meta, const std::string& path);
OccupancyGrid load_grid(const std::string& path, GridMeta* meta = nullptr);

// Posterior snapshots: PGM P5 maxval 65535 (16-bit big-endian), with the
// same sidecar. Probabilities quantize to p*65535 rounded.
void save_posterior(const PosteriorGrid& posterior, const GridMeta& meta, const std::string& path);
PosteriorGrid load_posterior(const std::string& path, GridMeta* meta = nullptr);

}  // namespace dreams
