#pragma once

#include "propdiv/game.hpp"

#include <cstdint>

namespace propdiv {

// splitmix64 generator. The standard <random> distributions are not pinned
// across library implementations, and both audit determinism and witness
// tie-breaking depend on the exact sample stream, so the artifact rolls its
// own minimal generator.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, bound); modulo bias is irrelevant at these sizes.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Inclusive integer range.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    // Numerator in [num_lo, num_hi], denominator in [den_lo, den_hi].
    Rational rational(int num_lo, int num_hi, int den_lo = 1, int den_hi = 5) {
        long long n = range(num_lo, num_hi);
        long long d = range(den_lo, den_hi);
        return Rational(n, d);
    }

    // Stable sub-seed derivation for per-cell configs.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
        Rng r(master ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
        return r.next();
    }

private:
    std::uint64_t state_;
};

// Unconstrained random game (domain "all"): every nonempty coalition gets an
// independent rational with the given bounds.
Game random_game(Rng& rng, int n, int num_lo = -20, int num_hi = 20, int den_lo = 1,
                 int den_hi = 5);

} // namespace propdiv
