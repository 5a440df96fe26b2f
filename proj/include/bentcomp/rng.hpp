#pragma once
#include <random>
#include <vector>
#include "bentcomp/bits.hpp"

namespace bentcomp {

// Deterministic RNG: mt19937_64 has a standard-mandated sequence, and the
// derived draws below avoid std::uniform_int_distribution (whose output is
// implementation-defined), so a fixed seed gives identical results everywhere.
class Rng {
public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 next() { return eng_(); }

    u32 below(u32 n) { // uniform in [0, n)
        u64 lim = ~u64(0) - ~u64(0) % n;
        u64 v;
        do { v = eng_(); } while (v >= lim);
        return u32(v % n);
    }

    bool bit() { return eng_() >> 63; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(u32(i))]);
    }

    // random permutation of {0, ..., n-1}
    std::vector<u32> permutation(u32 n) {
        std::vector<u32> p(n);
        for (u32 i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace bentcomp
