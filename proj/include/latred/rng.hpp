#pragma once

#include <cstdint>

namespace latred {

// SplitMix64. Chosen over std::mt19937 + distributions because its output is
// specified bit-for-bit, so seeded reports reproduce across platforms and
// standard-library versions. Streams are split by hashing a tag into the
// seed, giving independent substreams per subcomponent.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split(std::uint64_t tag) const {
        SplitMix64 h(state ^ (tag * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
        h.next();
        return h;
    }

    // uniform in [0, bound), rejection sampled to avoid modulo bias
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t r;
        do { r = next(); } while (r >= limit);
        return r % bound;
    }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return next() & 1ULL; }
};

}  // namespace latred
