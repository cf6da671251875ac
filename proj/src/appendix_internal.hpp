#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "wfano/appendix.hpp"

namespace wfano::appendix::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Stable per-region seed: the stream depends only on (seed, key), never on
/// scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& key) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return splitmix64(seed ^ h);
}

/// Deterministic generator with explicit uniform transforms (no reliance on
/// distribution internals).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin(double p = 0.5) { return uniform01() < p; }

  private:
    std::mt19937_64 gen_;
};

/// Uniform draw skewed toward one end: bias < 0 concentrates near lo,
/// bias > 0 near hi, 0 is plain uniform.
inline double draw_range(Rng& rng, double lo, double hi, int bias) {
    if (hi <= lo) return lo;
    double u = rng.uniform01();
    double t = u;
    if (bias < 0)
        t = u * u * u;
    else if (bias > 0)
        t = 1.0 - (1.0 - u) * (1.0 - u) * (1.0 - u);
    return lo + t * (hi - lo);
}

inline double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace wfano::appendix::detail
