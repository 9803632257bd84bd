#pragma once

#include <cstdint>
#include <string_view>

namespace pinwheel {

// Deterministic splitmix64 generator. Unlike std:: distributions, every
// draw is defined here, so identical seeds give identical results on any
// platform or standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t uniform(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        uniform(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Named sub-stream: one master seed fans out into independent streams.
    static Rng stream(std::uint64_t seed, std::string_view name,
                      std::uint64_t index = 0) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return Rng(seed ^ h);
    }

  private:
    std::uint64_t state_;
};

}  // namespace pinwheel
