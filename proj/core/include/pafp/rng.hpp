#pragma once

#include <cstdint>
#include <random>

namespace pafp {

// Seeded generator for reproducible corpora. Draws come straight from a
// mt19937_64 stream (whose output sequence the standard pins down exactly),
// never through std::uniform_*_distribution, so the same seed and call
// sequence give byte-identical results on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform-ish draw in [0, bound) by modulo; bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    // Inclusive range.
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    // Uniform in [0, 1) with 53 bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return next_unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace pafp
