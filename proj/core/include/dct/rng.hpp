#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace dct {

// splitmix64 finalizer, used for seed derivation.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based seed derivation: one master seed fans out into independent
// per-run, per-purpose streams (see docs/seeds.md).
inline uint64_t derive_seed(uint64_t master, uint64_t run, uint64_t stream) {
    uint64_t h = splitmix64(master);
    h = splitmix64(h ^ (0x9e3779b97f4a7c15ULL * (run + 1)));
    h = splitmix64(h ^ (0xc2b2ae3d27d4eb4fULL * (stream + 1)));
    return h;
}

// mt19937_64 with hand-rolled sampling. The engine is fully specified by the
// standard; the std distributions are not, so they are avoided.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform integer on {lo..hi}, both ends inclusive. Rejection sampling,
    // unbiased.
    int uniform_int(int lo, int hi) {
        uint64_t n = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<int>(r % n);
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

    double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // k distinct values from {0..n-1}, ascending order.
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = uniform_int(i, n - 1);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace dct
