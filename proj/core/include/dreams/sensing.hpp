#pragma once

#include <cstdint>
#include <vector>

#include "dreams/grid.hpp"
#include "dreams/rng.hpp"
#include "dreams/roadmap.hpp"

namespace dreams {

// Distance-dependent classification noise: an observed pixel reports its
// true occupancy with probability max(exp(-eta*d^2), p_min).
struct NoiseModel {
    double eta = 1e-3;    // 1/m^2
    double p_min = 0.6;   // floor; 0.5 would be pure noise

    double correctness_probability(double d) const;
};

// Named levels used throughout the experiments.
inline constexpr double kEtaLow = 1e-4;
inline constexpr double kEtaMed = 1e-3;
inline constexpr double kEtaHigh = 1e-2;

inline constexpr double kObservationExtent = 50.0;  // meters, square side

struct Observation {
    double center_x = 0.0;  // robot position, meters
    double center_y = 0.0;
    double extent = kObservationExtent;

    struct Sample {
        std::uint32_t pixel;
        std::uint8_t bit;  // observed occupancy
        double p;          // correctness probability used for the draw
    };
    std::vector<Sample> samples;
};

// One noisy snapshot of the square window centered on the robot, clipped
// to grid bounds. Each pixel flips independently with probability 1-p(d).
Observation sense(const OccupancyGrid& truth, double robot_x, double robot_y,
                  const NoiseModel& model, Rng& rng);

// Per-pixel Bayes update for the symmetric binary channel; posterior
// entries clamp to [kPosteriorEps, 1-kPosteriorEps].
void bayes_update(PosteriorGrid& posterior, const Observation& obs);

// Traversing an edge reveals the ground under it exactly.
void reveal_traversed(PosteriorGrid& posterior, const OccupancyGrid& truth,
                      std::uint32_t edge, const Roadmap& roadmap);

}  // namespace dreams
