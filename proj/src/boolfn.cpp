#include "bentcomp/boolfn.hpp"

#include <cmath>
#include <stdexcept>

namespace bentcomp {

u64 TruthTable::weight() const {
    u64 s = 0;
    for (u64 w : w_) s += __builtin_popcountll(w);
    return s;
}

int WalshSpectrum::max_abs() const {
    int m = 0;
    for (int x : v) m = std::max(m, std::abs(x));
    return m;
}

WalshSpectrum walsh_spectrum(const TruthTable& f, const Domain& d) {
    if (f.n() != d.dim()) throw std::invalid_argument("truth table does not fit the domain");
    u32 sz = d.size();
    std::vector<int> buf(sz);
    for (u32 x = 0; x < sz; ++x) buf[x] = 1 - 2 * f.get(x);
    for (u32 len = 1; len < sz; len <<= 1)
        for (u32 i = 0; i < sz; i += len << 1)
            for (u32 j = i; j < i + len; ++j) {
                int a = buf[j], b = buf[j + len];
                buf[j] = a + b;
                buf[j + len] = a - b;
            }
    WalshSpectrum s;
    s.n = d.dim();
    s.v.resize(sz);
    for (u32 w = 0; w < sz; ++w) s.v[w] = buf[d.coord_form(w)];

    // cheap structural checks on every transform
    i64 sum = 0, sq = 0;
    for (int x : s.v) {
        sum += x;
        sq += i64(x) * x;
    }
    if (sq != i64(sz) * sz) throw std::logic_error("spectrum violates Parseval");
    if (sum != i64(sz) * (1 - 2 * f.get(0)))
        throw std::logic_error("spectrum sum inconsistent with f(0)");
    return s;
}

int naive_walsh(const TruthTable& f, const Domain& d, u32 w) {
    u32 sz = d.size();
    int acc = 0;
    if (!d.is_product()) {
        const Field& F = d.whole_field();
        for (u32 x = 0; x < sz; ++x) {
            int b = f.get(x) ^ int(F.trace(F.mul(w, x), 1));
            acc += 1 - 2 * b;
        }
    } else {
        const Field& S = d.half_field();
        for (u32 x = 0; x < sz; ++x) {
            u32 t = S.trace(S.mul(d.hi(w), d.hi(x)), 1) ^
                    S.trace(S.mul(d.lo(w), d.lo(x)), 1);
            acc += 1 - 2 * int(f.get(x) ^ t);
        }
    }
    return acc;
}

bool is_bent(const WalshSpectrum& s) {
    if (s.n % 2) return false;
    int c = 1 << s.n / 2;
    for (int x : s.v)
        if (x != c && x != -c) return false;
    return true;
}

std::optional<int> plateau_k(const WalshSpectrum& s) {
    int c = 0;
    for (int x : s.v) {
        int a = std::abs(x);
        if (!a) continue;
        if (!c) c = a;
        else if (a != c) return std::nullopt;
    }
    // c is a power of two whenever the value set is {0, +-c} (Parseval)
    int lg = 0;
    while ((1 << lg) < c) ++lg;
    return 2 * lg - s.n;
}

std::map<u32, u64> plateau_profile(const WalshSpectrum& s) {
    std::map<u32, u64> m;
    for (int x : s.v) ++m[u32(std::abs(x))];
    return m;
}

u32 nonlinearity_bool(const WalshSpectrum& s) {
    return (u32(1) << (s.n - 1)) - u32(s.max_abs()) / 2;
}

TruthTable dual_of_bent(const TruthTable& f, const Domain& d) {
    WalshSpectrum s = walsh_spectrum(f, d);
    if (!is_bent(s)) throw std::invalid_argument("dual requested for a non-bent function");
    int c = 1 << s.n / 2;
    TruthTable g(s.n);
    for (u32 w = 0; w < d.size(); ++w) g.set(w, s.v[w] == -c);
    return g;
}

TruthTable derivative(const TruthTable& f, u32 a) {
    TruthTable g(f.n());
    for (u32 x = 0; x < f.size(); ++x) g.set(x, f.get(x) ^ f.get(x ^ a));
    return g;
}

std::vector<std::uint8_t> moebius(const std::vector<std::uint8_t>& v) {
    std::vector<std::uint8_t> a(v);
    u32 sz = u32(a.size());
    for (u32 len = 1; len < sz; len <<= 1)
        for (u32 i = 0; i < sz; i += len << 1)
            for (u32 j = i; j < i + len; ++j) a[j + len] ^= a[j];
    return a;
}

std::vector<std::uint8_t> anf(const TruthTable& f) {
    std::vector<std::uint8_t> v(f.size());
    for (u32 x = 0; x < f.size(); ++x) v[x] = std::uint8_t(f.get(x));
    return moebius(v);
}

int algebraic_degree(const TruthTable& f) {
    auto c = anf(f);
    int deg = 0;
    for (u32 mask = 0; mask < f.size(); ++mask)
        if (c[mask]) deg = std::max(deg, popcount(mask));
    return deg;
}

int quadratic_rank(const TruthTable& f) {
    if (algebraic_degree(f) > 2)
        throw std::invalid_argument("quadratic rank needs algebraic degree <= 2");
    int n = f.n();
    int f0 = f.get(0);
    std::vector<u32> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            u32 ei = u32(1) << i, ej = u32(1) << j;
            int b = f.get(ei ^ ej) ^ f.get(ei) ^ f.get(ej) ^ f0;
            rows[i] |= u32(b) << j;
        }
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = rank; r < n; ++r)
            if (rows[r] >> c & 1) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (int r = 0; r < n; ++r)
            if (r != rank && (rows[r] >> c & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

} // namespace bentcomp
