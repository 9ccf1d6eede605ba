#ifndef CLC_RNG_HPP
#define CLC_RNG_HPP

#include <cstdint>
#include <vector>

namespace clc {

/// Small deterministic generator (splitmix64). Used instead of <random>
/// engines/distributions so that seeded artifacts are byte-identical across
/// platforms and standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound > 0. Rejection sampling, unbiased.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// k distinct values from [0, n), in selection order.
    std::vector<size_t> sample(size_t n, size_t k) {
        std::vector<size_t> idx(n);
        for (size_t i = 0; i < n; ++i) idx[i] = i;
        if (k > n) k = n;
        for (size_t i = 0; i < k; ++i) {
            size_t j = i + static_cast<size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

   private:
    uint64_t state_;
};

}  // namespace clc

#endif
