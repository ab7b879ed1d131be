#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dreams/grid.hpp"

namespace dreams {

// 8 discrete headings, counter-clockwise from +x.
inline constexpr int kNumHeadings = 8;
inline constexpr std::array<int, 8> kDirDx = {1, 1, 0, -1, -1, -1, 0, 1};
inline constexpr std::array<int, 8> kDirDy = {0, 1, 1, 1, 0, -1, -1, -1};

inline int opposite_heading(int h) { return (h + 4) & 7; }

// Smallest angular separation in 45-degree steps (0..4).
inline int heading_diff(int a, int b) {
    int d = (a - b) & 7;
    return d > 4 ? 8 - d : d;
}

// Robot body swept along an edge: oriented rectangle, meters.
inline constexpr double kRobotLength = 3.5;
inline constexpr double kRobotWidth = 1.5;

struct Vertex {
    double x = 0.0;  // meters
    double y = 0.0;
};

// Undirected piece of ground shared by the directed edges between two
// lattice neighbors. Collision status and posterior mass live here.
struct Link {
    std::uint32_t a = 0;  // vertex ids, a < b
    std::uint32_t b = 0;
    double length = 0.0;
    std::vector<std::uint32_t> pixels;  // swept-volume footprint, grid indices
};

struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::uint32_t link = 0;
    double length = 0.0;
    std::uint8_t dir = 0;   // lattice heading from -> to
    bool reverse = false;   // traversed nose-away at fixed 1 m/s
};

struct Roadmap {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Link> links;
    std::uint32_t start = 0;
    std::uint32_t goal = 0;

    // Lattice bookkeeping.
    int nx = 0;
    int ny = 0;
    double spacing = 0.0;
    int grid_width_px = 0;
    int grid_height_px = 0;
    double resolution = 0.0;

    // CSR adjacency: outgoing edge ids of vertex v are
    // out_edges[out_offsets[v] .. out_offsets[v+1])  (ascending ids).
    std::vector<std::uint32_t> out_offsets;
    std::vector<std::uint32_t> out_edges;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_edges() const { return edges.size(); }
    std::size_t num_links() const { return links.size(); }

    const std::vector<std::uint32_t>& edge_footprint(std::uint32_t e) const {
        return links[edges[e].link].pixels;
    }

    std::uint32_t vertex_id(int ix, int iy) const {
        return static_cast<std::uint32_t>(iy) * nx + ix;
    }
};

// Regular lattice with 8-connected forward edges plus a reverse twin per
// ordered pair. Footprints rasterize the robot rectangle swept along the
// edge, conservatively (any pixel touched by the swath is included),
// clipped to grid bounds.
// Throws std::invalid_argument if vertex_spacing < grid resolution.
Roadmap build_roadmap(const OccupancyGrid& grid, double vertex_spacing);

// Default start/goal placement used by generators and the bench: edge
// midline, 10 m in from the left/right borders.
void assign_default_start_goal(Roadmap& roadmap);

struct WorldTruth {
    OccupancyGrid grid;
    // 1 = collision-free. Indexed by link id.
    std::vector<std::uint8_t> link_free;

    bool edge_free(const Roadmap& rm, std::uint32_t e) const {
        return link_free[rm.edges[e].link] != 0;
    }
};

// Link is free exactly when no footprint pixel is occupied.
WorldTruth truth_edge_status(const OccupancyGrid& grid, const Roadmap& roadmap);

// Undirected connectivity over free links (what a robot that may reverse
// can reach).
bool goal_reachable(const Roadmap& roadmap, const std::vector<std::uint8_t>& link_free,
                    std::uint32_t from, std::uint32_t to);

}  // namespace dreams
