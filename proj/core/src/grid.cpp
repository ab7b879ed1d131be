#include "dreams/grid.hpp"

#include <algorithm>
#include <numeric>

namespace dreams {

double occupancy_fraction(const OccupancyGrid& grid) {
    if (grid.cells.empty()) return 0.0;
    const auto occupied =
        std::count_if(grid.cells.begin(), grid.cells.end(), [](std::uint8_t c) { return c != 0; });
    return static_cast<double>(occupied) / static_cast<double>(grid.cells.size());
}

PosteriorGrid make_prior(const OccupancyGrid& grid, double prior) {
    return PosteriorGrid(grid.width_px, grid.height_px, grid.resolution, prior);
}

}  // namespace dreams
