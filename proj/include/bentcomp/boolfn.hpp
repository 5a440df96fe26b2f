#pragma once
#include <map>
#include <optional>
#include <vector>
#include "bentcomp/domain.hpp"

namespace bentcomp {

// Bit-packed Boolean function on N variables (point index = element mask).
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int n) : n_(n), w_(((u64(1) << n) + 63) >> 6, 0) {}

    int n() const { return n_; }
    u32 size() const { return u32(1) << n_; }
    int get(u32 i) const { return w_[i >> 6] >> (i & 63) & 1; }
    void set(u32 i, int v) {
        u64 b = u64(1) << (i & 63);
        if (v) w_[i >> 6] |= b; else w_[i >> 6] &= ~b;
    }
    void flip(u32 i) { w_[i >> 6] ^= u64(1) << (i & 63); }

    u64 weight() const;
    bool is_balanced() const { return weight() == size() / 2; }

    bool operator==(const TruthTable&) const = default;

private:
    int n_ = 0;
    std::vector<u64> w_;
};

// Walsh spectrum indexed by the field element w (or packed pair (w1,w2)):
// v[w] = sum_x (-1)^(f(x) + <w,x>).
struct WalshSpectrum {
    int n = 0;
    std::vector<int> v;
    int max_abs() const;
};

// O(N 2^N) transform: one coordinate butterfly, then a reindex by the trace
// coordinate forms of the domain's basis (dual-basis permutation).
WalshSpectrum walsh_spectrum(const TruthTable& f, const Domain& d);

// Direct O(2^N) summation through field multiplication and trace, sharing no
// code with the butterfly; oracle for tests.
int naive_walsh(const TruthTable& f, const Domain& d, u32 w);

bool is_bent(const WalshSpectrum& s);
// k such that values lie in {0, +-2^((n+k)/2)}; nullopt if not plateaued.
// Bent functions are exactly the 0-plateaued ones.
std::optional<int> plateau_k(const WalshSpectrum& s);
std::map<u32, u64> plateau_profile(const WalshSpectrum& s); // |W| -> count
u32 nonlinearity_bool(const WalshSpectrum& s);

// Dual of a bent function: sign pattern of the spectrum. Involution.
TruthTable dual_of_bent(const TruthTable& f, const Domain& d);

TruthTable derivative(const TruthTable& f, u32 a);

// Moebius transform: coefficient of the monomial prod_{i in mask} x_i.
// The transform is an involution, so it also maps coefficients to values.
std::vector<std::uint8_t> moebius(const std::vector<std::uint8_t>& v);
std::vector<std::uint8_t> anf(const TruthTable& f);
int algebraic_degree(const TruthTable& f); // constants have degree 0

// Rank of the symplectic form f(x+y)+f(x)+f(y)+f(0); requires degree <= 2.
// Always even.
int quadratic_rank(const TruthTable& f);

} // namespace bentcomp
