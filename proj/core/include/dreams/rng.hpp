#pragma once

#include <cstdint>

namespace dreams {

// splitmix64 finalizer. Used both as a sequential generator and as a
// stateless counter-based hash so that per-item draws (edge samples,
// pixel noise) are identical regardless of evaluation order or thread.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic combine of a seed and an index/tag into a fresh seed.
constexpr std::uint64_t mix64(std::uint64_t seed, std::uint64_t key) {
    return splitmix64(splitmix64(seed) ^ splitmix64(key * 0x9e3779b97f4a7c15ULL + 1));
}

// Map 64 random bits to a double in [0, 1).
constexpr double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Small deterministic generator. Not cryptographic; chosen over
// std::mt19937 so that streams are reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    double next_unit() { return unit_double(next_u64()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Inclusive bounds.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(double p) { return next_unit() < p; }

    // Fork an independent stream; the parent stream is not advanced.
    Rng stream(std::uint64_t tag) const { return Rng(mix64(state_, tag)); }

private:
    std::uint64_t state_;
};

// Stream tags for deriving independent per-purpose generators from one
// episode seed.
namespace stream_tag {
inline constexpr std::uint64_t kWorldGen = 0x577a11d5;
inline constexpr std::uint64_t kSensing = 0x5e4511f0;
inline constexpr std::uint64_t kPolicy = 0x90110c11;
inline constexpr std::uint64_t kPlanWorlds = 0x914a6a01;
inline constexpr std::uint64_t kEvalWorlds = 0xe7a10a02;
}  // namespace stream_tag

}  // namespace dreams
