#pragma once

#include <cstdint>

namespace stmfa {

// SplitMix64. Self-contained so streams are reproducible across platforms
// and standard libraries; every seeded component in the project draws from
// this generator only.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Derive an independent child stream, e.g. one per clip or per parameter.
    Rng fork(std::uint64_t salt) {
        Rng child(state_ ^ (salt * 0xD6E8FEB86659FD93ull + 0x2545F4914F6CDD1Dull));
        child.next_u64();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace stmfa
