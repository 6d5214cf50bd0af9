#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace bipdisc {

// All randomized routines draw from mt19937_64 through the helpers below.
// The standard fixes mt19937_64's output sequence, and the bounded sampler
// and Fisher-Yates shuffle are spelled out here rather than delegated to
// distribution classes, so identical seeds reproduce identical results on
// any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, bound), rejection-sampled to avoid modulo bias.
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform01() - 1.0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; i--) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        shuffle(p);
        return p;
    }

    // Deterministic per-stage seed derivation from a master seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stage) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stage + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace bipdisc
