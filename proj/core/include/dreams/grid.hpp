#pragma once

#include <cstdint>
#include <vector>

namespace dreams {

// Binary ground-truth occupancy. Row-major, 1 = obstacle.
// Coordinates: x runs along columns, y along rows; cell (col,row) covers
// [col*res, (col+1)*res) x [row*res, (row+1)*res) meters.
struct OccupancyGrid {
    int width_px = 0;
    int height_px = 0;
    double resolution = 0.0;  // meters per pixel
    std::vector<std::uint8_t> cells;

    OccupancyGrid() = default;
    OccupancyGrid(int w, int h, double res)
        : width_px(w), height_px(h), resolution(res), cells(static_cast<std::size_t>(w) * h, 0) {}

    std::size_t size() const { return cells.size(); }
    bool in_bounds(int col, int row) const {
        return col >= 0 && row >= 0 && col < width_px && row < height_px;
    }
    std::size_t index(int col, int row) const {
        return static_cast<std::size_t>(row) * width_px + col;
    }
    std::uint8_t at(int col, int row) const { return cells[index(col, row)]; }
    void set(int col, int row, std::uint8_t v) { cells[index(col, row)] = v; }

    double width_m() const { return width_px * resolution; }
    double height_m() const { return height_px * resolution; }

    // Center of a pixel in meters.
    double pixel_cx(int col) const { return (col + 0.5) * resolution; }
    double pixel_cy(int row) const { return (row + 0.5) * resolution; }
};

double occupancy_fraction(const OccupancyGrid& grid);

// Per-pixel probability of occupancy, same layout as OccupancyGrid.
struct PosteriorGrid {
    int width_px = 0;
    int height_px = 0;
    double resolution = 0.0;
    std::vector<double> p;

    PosteriorGrid() = default;
    PosteriorGrid(int w, int h, double res, double prior)
        : width_px(w), height_px(h), resolution(res),
          p(static_cast<std::size_t>(w) * h, prior) {}

    std::size_t size() const { return p.size(); }
    std::size_t index(int col, int row) const {
        return static_cast<std::size_t>(row) * width_px + col;
    }
};

// Clamp bound keeping the posterior away from absorbing 0/1; only
// traversal revelation may pin a pixel this hard.
inline constexpr double kPosteriorEps = 1e-6;

// Prior for never-observed pixels: optimistically almost free.
inline constexpr double kUnobservedPrior = 0.01;

PosteriorGrid make_prior(const OccupancyGrid& grid, double prior = kUnobservedPrior);

}  // namespace dreams
