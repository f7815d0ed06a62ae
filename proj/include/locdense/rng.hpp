#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace locdense {

// mt19937_64 with hand-rolled rejection sampling. std::uniform_int_distribution
// is implementation-defined, so bounded draws are done manually to keep every
// seeded stream identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), unbiased.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t reject = (-n) % n; // 2^64 mod n
        for (;;) {
            std::uint64_t x = eng_();
            if (x >= reject) return x % n;
        }
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

private:
    std::mt19937_64 eng_;
};

} // namespace locdense
