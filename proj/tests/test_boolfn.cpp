#include <doctest.h>

#include "bentcomp/boolfn.hpp"
#include "bentcomp/rng.hpp"

using namespace bentcomp;

namespace {

template <class Fn>
TruthTable table_of(const Domain& d, Fn&& fn) {
    TruthTable t(d.dim());
    for (u32 x = 0; x < d.size(); ++x) t.set(x, fn(x) & 1);
    return t;
}

TruthTable random_table(int n, Rng& rng) {
    TruthTable t(n);
    for (u32 x = 0; x < t.size(); ++x) t.set(x, rng.bit());
    return t;
}

} // namespace

TEST_CASE("butterfly transform matches direct summation") {
    Rng rng(101);
    for (int k = 2; k <= 8; ++k) {
        Domain d = Domain::over_field(make_field(k));
        TruthTable f = random_table(k, rng);
        WalshSpectrum s = walsh_spectrum(f, d);
        for (u32 w = 0; w < d.size(); ++w)
            CHECK(s.v[w] == naive_walsh(f, d, w));
    }
    for (int m : {2, 3}) {
        Domain d = Domain::over_product(make_field(m));
        for (int rep = 0; rep < 3; ++rep) {
            TruthTable f = random_table(2 * m, rng);
            WalshSpectrum s = walsh_spectrum(f, d);
            for (u32 w = 0; w < d.size(); ++w)
                CHECK(s.v[w] == naive_walsh(f, d, w));
        }
    }
    { // spot checks at a size where the direct sum is already slow
        Domain d = Domain::over_field(make_field(10));
        TruthTable f = random_table(10, rng);
        WalshSpectrum s = walsh_spectrum(f, d);
        for (int i = 0; i < 40; ++i) {
            u32 w = rng.below(d.size());
            CHECK(s.v[w] == naive_walsh(f, d, w));
        }
    }
}

TEST_CASE("linear functions concentrate the spectrum") {
    auto F = make_field(6);
    Domain d = Domain::over_field(F);
    for (u32 c : {u32(1), u32(5), F->generator()}) {
        TruthTable f = table_of(d, [&](u32 x) { return F->trace_bit(F->mul(c, x)); });
        WalshSpectrum s = walsh_spectrum(f, d);
        for (u32 w = 0; w < d.size(); ++w)
            CHECK(s.v[w] == (w == c ? 64 : 0));
        CHECK(nonlinearity_bool(s) == 0);
        CHECK(plateau_k(s) == 6);
        CHECK_FALSE(is_bent(s));
    }
}

TEST_CASE("a quadratic on an odd-degree field is one-plateaued") {
    auto F = make_field(5);
    Domain d = Domain::over_field(F);
    TruthTable f = table_of(d, [&](u32 x) { return F->trace_bit(F->pow(x, 3)); });
    WalshSpectrum s = walsh_spectrum(f, d);
    CHECK(plateau_k(s) == 1);
    CHECK(s.max_abs() == 8);
    for (int v : s.v) CHECK((v == 0 || v == 8 || v == -8));
    CHECK(nonlinearity_bool(s) == 12);
    CHECK(quadratic_rank(f) == 4);
    CHECK(algebraic_degree(f) == 2);
}

TEST_CASE("an exponent trace that collapses to zero") {
    // x^5 lies in the 4-element subfield of GF(16), where the absolute trace
    // from GF(16) vanishes identically.
    auto F = make_field(4);
    Domain d = Domain::over_field(F);
    TruthTable f = table_of(d, [&](u32 x) { return F->trace_bit(F->pow(x, 5)); });
    CHECK(f.weight() == 0);
    WalshSpectrum s = walsh_spectrum(f, d);
    CHECK(s.v[0] == 16);
    CHECK(plateau_k(s) == 4);
    CHECK(algebraic_degree(f) == 0);
}

TEST_CASE("bentness, duals, and derivative balance on a product domain") {
    auto H = make_field(3);
    Domain d = Domain::over_product(H);
    // f(y,z) = tr(y z) is bent and equals its own dual
    TruthTable f = table_of(d, [&](u32 v) {
        return H->trace_bit(H->mul(d.hi(v), d.lo(v)));
    });
    WalshSpectrum s = walsh_spectrum(f, d);
    CHECK(is_bent(s));
    CHECK(plateau_k(s) == 0);
    CHECK(nonlinearity_bool(s) == 28); // 2^5 - 2^2
    CHECK(dual_of_bent(f, d) == f);
    CHECK(quadratic_rank(f) == 6);

    for (u32 a = 1; a < d.size(); ++a) CHECK(derivative(f, a).is_balanced());
    CHECK(derivative(f, 0).weight() == 0);

    // y -> y pi(z) for a random permutation pi stays bent; taking the dual
    // twice returns the original function
    Rng rng(55);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<u32> pi = rng.permutation(H->size());
        TruthTable g = table_of(d, [&](u32 v) {
            return H->trace_bit(H->mul(d.hi(v), pi[d.lo(v)]));
        });
        WalshSpectrum sg = walsh_spectrum(g, d);
        CHECK(is_bent(sg));
        TruthTable gd = dual_of_bent(g, d);
        CHECK(is_bent(walsh_spectrum(gd, d)));
        CHECK(dual_of_bent(gd, d) == g);
    }

    // a non-bent function rejects the dual
    TruthTable zero(d.dim());
    CHECK_THROWS(dual_of_bent(zero, d));
}

TEST_CASE("random functions are rarely plateaued") {
    Rng rng(202);
    Domain d = Domain::over_field(make_field(8));
    TruthTable f = random_table(8, rng);
    WalshSpectrum s = walsh_spectrum(f, d);
    CHECK_FALSE(plateau_k(s).has_value());
    CHECK(nonlinearity_bool(s) == (256 - u32(s.max_abs())) / 2);
}

TEST_CASE("moebius transform is an involution") {
    Rng rng(303);
    for (int n : {3, 5, 8}) {
        std::vector<std::uint8_t> v(size_t(1) << n);
        for (auto& b : v) b = std::uint8_t(rng.bit());
        CHECK(moebius(moebius(v)) == v);
    }
}

TEST_CASE("algebraic normal form of small functions") {
    // f(x0,x1) = x0 x1 on two variables: coefficients 0,0,0,1
    TruthTable andf(2);
    andf.set(3, 1);
    CHECK(anf(andf) == std::vector<std::uint8_t>{0, 0, 0, 1});
    CHECK(algebraic_degree(andf) == 2);

    TruthTable ones(3);
    for (u32 x = 0; x < 8; ++x) ones.set(x, 1);
    CHECK(algebraic_degree(ones) == 0);
    CHECK(algebraic_degree(TruthTable(3)) == 0);

    // indicator of the origin has full degree
    TruthTable ind(4);
    ind.set(0, 1);
    CHECK(algebraic_degree(ind) == 4);

    // coordinate projection is linear
    TruthTable proj(4);
    for (u32 x = 0; x < 16; ++x) proj.set(x, x & 1);
    CHECK(algebraic_degree(proj) == 1);
    CHECK(quadratic_rank(proj) == 0);
}

TEST_CASE("quadratic rank validation") {
    // product of two independent linear forms has rank 2 regardless of n
    TruthTable f(5);
    for (u32 x = 0; x < 32; ++x) f.set(x, (x & 1) & (x >> 3 & 1));
    CHECK(quadratic_rank(f) == 2);

    TruthTable cubic(3);
    cubic.set(7, 1); // x0 x1 x2
    CHECK_THROWS(quadratic_rank(cubic));
}
