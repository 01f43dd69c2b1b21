#pragma once

#include <cstdint>
#include <random>

namespace charcodes {

/// Deterministic random source. mt19937_64 has a standard-fixed output
/// sequence, and the bounded draw below avoids std::uniform_int_distribution,
/// whose mapping is implementation-defined. Same seed, same stream, anywhere.
class Rng {
   public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform draw from [0, n), n >= 1, via rejection sampling.
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

   private:
    std::mt19937_64 eng_;
};

}  // namespace charcodes
