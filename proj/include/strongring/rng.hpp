#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace strongring {

// Seeded 64-bit generator used by every randomized code path. mt19937_64 has a
// fully specified output sequence, and the bounded draws below avoid
// std::uniform_int_distribution, whose output is implementation defined. All
// randomized tests and suites log the seed they ran with.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n). Modulo bias is irrelevant at desk scale; determinism
    // across platforms is what matters here.
    std::uint64_t uniform(std::uint64_t n) { return n ? engine_() % n : 0; }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Counter-based derivation: sample i of a run seeded with s gets its own
    // stream, so a parallel chunking of samples cannot change results.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t counter) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + counter * 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace strongring
