#include "dreams/roadmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dreams/error.hpp"

namespace dreams {

namespace {

// Conservative rasterization of the swath swept by the robot rectangle
// dragged along segment (x0,y0)->(x1,y1): an oriented rectangle of length
// |segment| + kRobotLength and width kRobotWidth centered on the segment
// midpoint. A pixel is included when its square overlaps the rectangle
// (separating-axis test on the two frames), clipped to grid bounds.
std::vector<std::uint32_t> rasterize_swath(const OccupancyGrid& grid, double x0, double y0,
                                           double x1, double y1) {
    const double mx = 0.5 * (x0 + x1);
    const double my = 0.5 * (y0 + y1);
    const double seg = std::hypot(x1 - x0, y1 - y0);
    const double ux = (x1 - x0) / seg;
    const double uy = (y1 - y0) / seg;
    const double half_len = 0.5 * (seg + kRobotLength);
    const double half_wid = 0.5 * kRobotWidth;
    const double res = grid.resolution;
    const double half_px = 0.5 * res;

    // Extent of the rectangle along grid axes, for the candidate box.
    const double ext_x = half_len * std::abs(ux) + half_wid * std::abs(uy);
    const double ext_y = half_len * std::abs(uy) + half_wid * std::abs(ux);
    const int c0 = std::max(0, static_cast<int>(std::floor((mx - ext_x) / res)) - 1);
    const int c1 = std::min(grid.width_px - 1, static_cast<int>(std::floor((mx + ext_x) / res)) + 1);
    const int r0 = std::max(0, static_cast<int>(std::floor((my - ext_y) / res)) - 1);
    const int r1 = std::min(grid.height_px - 1, static_cast<int>(std::floor((my + ext_y) / res)) + 1);

    std::vector<std::uint32_t> pixels;
    for (int row = r0; row <= r1; ++row) {
        for (int col = c0; col <= c1; ++col) {
            const double px = grid.pixel_cx(col) - mx;
            const double py = grid.pixel_cy(row) - my;
            // Rectangle frame axes.
            const double along = px * ux + py * uy;
            const double across = -px * uy + py * ux;
            const double pad_along = half_px * (std::abs(ux) + std::abs(uy));
            if (std::abs(along) > half_len + pad_along) continue;
            if (std::abs(across) > half_wid + pad_along) continue;
            // Grid frame axes (pixel square vs rectangle extent).
            if (std::abs(px) > ext_x + half_px) continue;
            if (std::abs(py) > ext_y + half_px) continue;
            pixels.push_back(static_cast<std::uint32_t>(grid.index(col, row)));
        }
    }
    return pixels;
}

}  // namespace

Roadmap build_roadmap(const OccupancyGrid& grid, double vertex_spacing) {
    if (vertex_spacing < grid.resolution) {
        throw std::invalid_argument("vertex_spacing must be >= grid resolution");
    }
    Roadmap rm;
    rm.spacing = vertex_spacing;
    rm.grid_width_px = grid.width_px;
    rm.grid_height_px = grid.height_px;
    rm.resolution = grid.resolution;
    rm.nx = static_cast<int>(std::floor(grid.width_m() / vertex_spacing)) + 1;
    rm.ny = static_cast<int>(std::floor(grid.height_m() / vertex_spacing)) + 1;

    rm.vertices.reserve(static_cast<std::size_t>(rm.nx) * rm.ny);
    for (int iy = 0; iy < rm.ny; ++iy) {
        for (int ix = 0; ix < rm.nx; ++ix) {
            rm.vertices.push_back({ix * vertex_spacing, iy * vertex_spacing});
        }
    }

    const auto link_key = [](std::uint32_t a, std::uint32_t b) {
        return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    };
    std::unordered_map<std::uint64_t, std::uint32_t> link_ids;
    link_ids.reserve(rm.vertices.size() * 4);

    for (std::uint32_t u = 0; u < rm.vertices.size(); ++u) {
        const int ix = static_cast<int>(u) % rm.nx;
        const int iy = static_cast<int>(u) / rm.nx;
        for (int d = 0; d < kNumHeadings; ++d) {
            const int jx = ix + kDirDx[d];
            const int jy = iy + kDirDy[d];
            if (jx < 0 || jy < 0 || jx >= rm.nx || jy >= rm.ny) continue;
            const std::uint32_t v = rm.vertex_id(jx, jy);

            std::uint32_t link;
            const auto key = link_key(u, v);
            if (auto it = link_ids.find(key); it != link_ids.end()) {
                link = it->second;
            } else {
                link = static_cast<std::uint32_t>(rm.links.size());
                link_ids.emplace(key, link);
                Link l;
                l.a = std::min(u, v);
                l.b = std::max(u, v);
                l.length = std::hypot(rm.vertices[u].x - rm.vertices[v].x,
                                      rm.vertices[u].y - rm.vertices[v].y);
                l.pixels = rasterize_swath(grid, rm.vertices[u].x, rm.vertices[u].y,
                                           rm.vertices[v].x, rm.vertices[v].y);
                rm.links.push_back(std::move(l));
            }

            const double len = rm.links[link].length;
            rm.edges.push_back({u, v, link, len, static_cast<std::uint8_t>(d), false});
            rm.edges.push_back({u, v, link, len, static_cast<std::uint8_t>(d), true});
        }
    }

    // CSR adjacency; edge ids are already grouped by source vertex in
    // ascending order by construction.
    rm.out_offsets.assign(rm.vertices.size() + 1, 0);
    for (const Edge& e : rm.edges) rm.out_offsets[e.from + 1]++;
    for (std::size_t v = 1; v < rm.out_offsets.size(); ++v) rm.out_offsets[v] += rm.out_offsets[v - 1];
    rm.out_edges.resize(rm.edges.size());
    {
        std::vector<std::uint32_t> cursor(rm.out_offsets.begin(), rm.out_offsets.end() - 1);
        for (std::uint32_t e = 0; e < rm.edges.size(); ++e) {
            rm.out_edges[cursor[rm.edges[e].from]++] = e;
        }
    }

    assign_default_start_goal(rm);
    return rm;
}

void assign_default_start_goal(Roadmap& rm) {
    const double width = (rm.nx - 1) * rm.spacing;
    const double height = (rm.ny - 1) * rm.spacing;
    const auto nearest = [&](double x, double y) {
        const int ix = std::clamp(static_cast<int>(std::lround(x / rm.spacing)), 0, rm.nx - 1);
        const int iy = std::clamp(static_cast<int>(std::lround(y / rm.spacing)), 0, rm.ny - 1);
        return rm.vertex_id(ix, iy);
    };
    rm.start = nearest(std::min(10.0, width * 0.1), height / 2.0);
    rm.goal = nearest(width - std::min(10.0, width * 0.1), height / 2.0);
}

WorldTruth truth_edge_status(const OccupancyGrid& grid, const Roadmap& roadmap) {
    WorldTruth truth;
    truth.grid = grid;
    truth.link_free.resize(roadmap.links.size(), 1);
    for (std::size_t l = 0; l < roadmap.links.size(); ++l) {
        for (const std::uint32_t px : roadmap.links[l].pixels) {
            if (grid.cells[px]) {
                truth.link_free[l] = 0;
                break;
            }
        }
    }
    return truth;
}

bool goal_reachable(const Roadmap& rm, const std::vector<std::uint8_t>& link_free,
                    std::uint32_t from, std::uint32_t to) {
    std::vector<std::uint8_t> seen(rm.vertices.size(), 0);
    std::vector<std::uint32_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        for (std::uint32_t i = rm.out_offsets[u]; i < rm.out_offsets[u + 1]; ++i) {
            const Edge& e = rm.edges[rm.out_edges[i]];
            if (e.reverse) continue;  // forward twin is enough for connectivity
            if (!link_free[e.link]) continue;
            if (!seen[e.to]) {
                seen[e.to] = 1;
                stack.push_back(e.to);
            }
        }
    }
    return false;
}

}  // namespace dreams
