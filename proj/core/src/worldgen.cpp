#include "dreams/worldgen.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dreams/error.hpp"
#include "dreams/rng.hpp"

namespace dreams {

std::string to_string(WorldKind kind) {
    return kind == WorldKind::Forest ? "forest" : "desert";
}

WorldKind world_kind_from_string(const std::string& s) {
    if (s == "forest") return WorldKind::Forest;
    if (s == "desert") return WorldKind::Desert;
    throw InvalidConfig("unknown world kind: " + s);
}

namespace {

void stamp_disc(OccupancyGrid& grid, double cx, double cy, double radius, std::uint8_t value) {
    const double res = grid.resolution;
    const int c0 = std::max(0, static_cast<int>(std::floor((cx - radius) / res)));
    const int c1 = std::min(grid.width_px - 1, static_cast<int>(std::floor((cx + radius) / res)));
    const int r0 = std::max(0, static_cast<int>(std::floor((cy - radius) / res)));
    const int r1 = std::min(grid.height_px - 1, static_cast<int>(std::floor((cy + radius) / res)));
    const double r2 = radius * radius;
    for (int row = r0; row <= r1; ++row) {
        for (int col = c0; col <= c1; ++col) {
            const double dx = grid.pixel_cx(col) - cx;
            const double dy = grid.pixel_cy(row) - cy;
            if (dx * dx + dy * dy <= r2) grid.set(col, row, value);
        }
    }
}

struct Margin {
    double x, y, radius;
    bool contains(double px, double py, double extra) const {
        const double dx = px - x;
        const double dy = py - y;
        const double r = radius + extra;
        return dx * dx + dy * dy < r * r;
    }
};

constexpr double kMarginRadius = 6.0;  // kept clear around start and goal
constexpr int kRetryBudget = 32;

// Tree clusters thrown at poisson-disk separated centers until the
// occupancy target is met. Clustering leaves corridors between groups.
void fill_forest(OccupancyGrid& grid, Rng& rng, const std::vector<Margin>& margins) {
    const double w = grid.width_m();
    const double h = grid.height_m();
    const double target = rng.uniform(0.23, 0.30);
    const double min_sep = 8.5;

    std::vector<std::pair<double, double>> centers;
    const std::size_t total = grid.size();
    auto occupied = [&grid, total] {
        std::size_t n = 0;
        for (const auto c : grid.cells) n += c;
        return static_cast<double>(n) / static_cast<double>(total);
    };

    int stale = 0;
    double frac = 0.0;
    while (frac < target && stale < 4000) {
        const double cx = rng.uniform(0.0, w);
        const double cy = rng.uniform(0.0, h);
        bool ok = true;
        for (const auto& m : margins) {
            if (m.contains(cx, cy, 3.0)) { ok = false; break; }
        }
        if (ok) {
            for ((void)ok; const auto& c : centers) {
                const double dx = c.first - cx;
                const double dy = c.second - cy;
                if (dx * dx + dy * dy < min_sep * min_sep) { ok = false; break; }
            }
        }
        if (!ok) {
            ++stale;
            continue;
        }
        centers.emplace_back(cx, cy);
        const int trees = rng.uniform_int(5, 11);
        for (int t = 0; t < trees; ++t) {
            const double ang = rng.uniform(0.0, 2.0 * M_PI);
            const double dist = rng.uniform(0.0, 3.2);
            const double r = rng.uniform(0.5, 1.3);
            stamp_disc(grid, cx + dist * std::cos(ang), cy + dist * std::sin(ang), r, 1);
        }
        frac = occupied();
    }
}

// Few large irregular blobs (overlapping disc triples).
void fill_desert(OccupancyGrid& grid, Rng& rng, const std::vector<Margin>& margins) {
    const double w = grid.width_m();
    const double h = grid.height_m();
    const double target = rng.uniform(0.045, 0.08);

    const std::size_t total = grid.size();
    auto occupied = [&grid, total] {
        std::size_t n = 0;
        for (const auto c : grid.cells) n += c;
        return static_cast<double>(n) / static_cast<double>(total);
    };

    int stale = 0;
    while (occupied() < target && stale < 4000) {
        const double cx = rng.uniform(0.0, w);
        const double cy = rng.uniform(0.0, h);
        const double r = rng.uniform(2.5, 6.0);
        bool ok = true;
        for (const auto& m : margins) {
            if (m.contains(cx, cy, r)) { ok = false; break; }
        }
        if (!ok) {
            ++stale;
            continue;
        }
        stamp_disc(grid, cx, cy, r, 1);
        const int lobes = rng.uniform_int(1, 3);
        for (int i = 0; i < lobes; ++i) {
            const double ang = rng.uniform(0.0, 2.0 * M_PI);
            const double off = rng.uniform(0.4, 0.9) * r;
            stamp_disc(grid, cx + off * std::cos(ang), cy + off * std::sin(ang),
                       rng.uniform(0.4, 0.8) * r, 1);
        }
    }
}

}  // namespace

OccupancyGrid generate_world(WorldKind kind, double width_m, double height_m, double resolution,
                             std::uint64_t rng_seed) {
    if (width_m <= 0 || height_m <= 0 || resolution <= 0) {
        throw InvalidConfig("generate_world: dimensions and resolution must be positive");
    }
    const int w = static_cast<int>(std::lround(width_m / resolution));
    const int h = static_cast<int>(std::lround(height_m / resolution));

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        OccupancyGrid grid(w, h, resolution);
        Rng rng(mix64(mix64(rng_seed, static_cast<std::uint64_t>(attempt)), stream_tag::kWorldGen));

        // Start/goal live where assign_default_start_goal will put them.
        Roadmap probe;
        probe.nx = static_cast<int>(std::floor(width_m / kDefaultVertexSpacing)) + 1;
        probe.ny = static_cast<int>(std::floor(height_m / kDefaultVertexSpacing)) + 1;
        probe.spacing = kDefaultVertexSpacing;
        assign_default_start_goal(probe);
        const auto vertex_xy = [&probe](std::uint32_t v) {
            return std::pair<double, double>{(v % probe.nx) * probe.spacing,
                                             (v / probe.nx) * probe.spacing};
        };
        const auto [sx, sy] = vertex_xy(probe.start);
        const auto [gx, gy] = vertex_xy(probe.goal);
        const std::vector<Margin> margins = {{sx, sy, kMarginRadius}, {gx, gy, kMarginRadius}};

        if (kind == WorldKind::Forest) {
            fill_forest(grid, rng, margins);
        } else {
            fill_desert(grid, rng, margins);
        }
        for (const auto& m : margins) stamp_disc(grid, m.x, m.y, m.radius, 0);

        const Roadmap rm = build_roadmap(grid, kDefaultVertexSpacing);
        const WorldTruth truth = truth_edge_status(grid, rm);
        if (goal_reachable(rm, truth.link_free, rm.start, rm.goal)) {
            return grid;
        }
    }
    throw UnsatisfiableWorld("generate_world: no traversable " + to_string(kind) +
                             " world within " + std::to_string(kRetryBudget) + " attempts");
}

}  // namespace dreams
