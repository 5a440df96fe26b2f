#include <doctest.h>

#include <numeric>
#include <set>

#include "bentcomp/analysis.hpp"
#include "bentcomp/constructions.hpp"
#include "bentcomp/rng.hpp"

using namespace bentcomp;

namespace {

std::vector<u32> identity_table(int m) {
    std::vector<u32> h(u32(1) << m);
    for (u32 i = 0; i < h.size(); ++i) h[i] = i;
    return h;
}

// all embedded elements of the subfield copy inside the big field
std::vector<u32> subfield_copy(const Tower& tw) {
    std::vector<u32> v;
    for (u32 a = 0; a < (u32(1) << tw.m()); ++a) v.push_back(tw.embed(a));
    return v;
}

} // namespace

TEST_CASE("switch polynomial value tables") {
    CHECK_THROWS(ReducedPolynomial(1, TruthTable(0)));
    CHECK_THROWS(ReducedPolynomial(3, TruthTable(3))); // arity mismatch

    auto z = ReducedPolynomial::zero(4);
    CHECK(z.k() == 4);
    CHECK(z.arity() == 3);
    for (u32 a = 0; a < 8; ++a) CHECK(z.eval(a) == 0);

    auto x3 = ReducedPolynomial::single_variable(4, 3);
    for (u32 a = 0; a < 8; ++a) CHECK(x3.eval(a) == int((a >> 1) & 1));
    CHECK_THROWS(ReducedPolynomial::single_variable(4, 1));
    CHECK_THROWS(ReducedPolynomial::single_variable(4, 5));

    auto prod = ReducedPolynomial::product_of_all(4);
    for (u32 a = 0; a < 8; ++a) CHECK(prod.eval(a) == int(a == 7));

    Rng r1(5), r2(5);
    CHECK(ReducedPolynomial::random(5, r1).values() ==
          ReducedPolynomial::random(5, r2).values());
}

TEST_CASE("trace-composition family construction and validation") {
    auto tw = make_tower(3);
    CHECK_THROWS(trace_perm(0, std::vector<u32>(7, 0), tw));  // wrong size
    CHECK_THROWS(trace_perm(0, std::vector<u32>(8, 0), tw));  // not a permutation
    CHECK_THROWS(trace_perm(-1, identity_table(3), tw));

    // with h = id the function is x^(2^e) * (x + x^(2^m))
    const Field& big = tw->big();
    for (int e : {0, 1, 2}) {
        TracePermPair p = trace_perm(e, identity_table(3), tw);
        CHECK(p.e == e);
        for (u32 x = 0; x < 64; ++x) {
            u32 want = big.mul(big.frobenius(x, e), x ^ big.frobenius(x, 3));
            CHECK(p.F(x) == want);
        }
        for (u32 z = 0; z < 8; ++z)
            CHECK(p.H(z) == tw->small().mul(tw->small().frobenius(z, e), z));
    }
}

TEST_CASE("subfield components factor through the half-size companion") {
    // identity and random inner permutations, all exponents
    for (int m : {2, 3}) {
        auto tw = make_tower(m);
        CHECK(verify_walsh_factorization(trace_perm(0, identity_table(m), tw)));
        Rng rng(7);
        for (int trial = 0; trial < 3; ++trial) {
            auto h = rng.permutation(u32(1) << m);
            for (int e = 0; e < 2 * m; ++e)
                CHECK(verify_walsh_factorization(trace_perm(e, h, tw)));
        }
    }
}

TEST_CASE("trace-composition families have the maximal bent count") {
    for (int m : {2, 3, 4}) {
        auto tw = make_tower(m);
        Rng rng(3);
        auto h = rng.permutation(u32(1) << m);
        for (int e = 0; e < m; ++e) {
            AnalysisReport rep = analyze(trace_perm(e, h, tw).F);
            CHECK(rep.bent_count == (u64(1) << 2 * m) - (u64(1) << m));
            CHECK(rep.is_maximal);
            CHECK(rep.s_f.equals_subfield);
        }
    }
}

TEST_CASE("monomial inner map statistics") {
    CHECK_THROWS(monomial_trace_stats(4, 3, 0));   // 4 = 2^2: linear power
    CHECK_THROWS(monomial_trace_stats(9, 3, 0));   // 9 = 2 mod 7: linear power
    CHECK_THROWS(monomial_trace_stats(5, 4, 0));   // gcd(5, 15) = 5
    CHECK_THROWS(monomial_trace_stats(31, 8, 0));  // gcd(31 - 1, 255) = 15

    MonomialTraceStats s = monomial_trace_stats(3, 3, 0);
    CHECK(s.max_abs_walsh == 4);
    CHECK(s.family_nonlinearity == 16); // 2^5 - 2^2 * 4
    CHECK(s.lower_bound == 4);          // 2^(floor(6/4) + 1)
    CHECK(s.bound_holds);

    // the quadratic-extension exponent at m = 8 with two classic choices
    MonomialTraceStats a = monomial_trace_stats(31, 8, 3);
    CHECK(a.max_abs_walsh == 32);
    CHECK(a.family_nonlinearity == 28672); // 2^15 - 2^12
    CHECK(a.value_counts ==
          std::map<int, u64>{{-16, 80}, {0, 120}, {16, 16}, {32, 40}});

    MonomialTraceStats b = monomial_trace_stats(53, 8, 2);
    CHECK(b.max_abs_walsh == 64);
    CHECK(b.family_nonlinearity == 24576); // 2^15 - 2^13
    CHECK(b.value_counts ==
          std::map<int, u64>{{-16, 96}, {0, 60}, {16, 96}, {64, 4}});
}

TEST_CASE("structured exponents over the half field") {
    NihoExponent a = niho_exponent(4, 1, 3);
    CHECK(a.u == 31);
    CHECK(a.divisor == 16);
    CHECK(a.min_max_abs == 32);
    NihoExponent b = niho_exponent(4, 3, 2);
    CHECK(b.u == 53);

    CHECK_THROWS(niho_exponent(4, 0, 3));   // s = 0
    CHECK_THROWS(niho_exponent(4, 15, 3));  // s = 2^t - 1
    CHECK_THROWS(niho_exponent(2, 1, 0));   // gcd(2^0 - 1, 5) = 5

    // spectrum divisibility and the guaranteed magnitude
    for (const NihoExponent& ne : {a, b}) {
        MonomialTraceStats st = monomial_trace_stats(ne.u, 8, ne.e);
        CHECK(st.max_abs_walsh >= ne.min_max_abs);
        for (auto [v, cnt] : st.value_counts) CHECK(v % int(ne.divisor) == 0);
    }
}

TEST_CASE("three-valued spectra tie the magnitude to a root count") {
    // x^(2^e)+1-type exponents with gcd(m, e) = 1 at m = 5
    for (u64 u : {3, 13, 5}) { // 2^1+1, 2^4-2^2+1, 2^2+2^1-1
        ThreeValuedReport r = three_valued_report(u, 5);
        CHECK(r.three_valued);
        CHECK(r.A == 8);
        CHECK(r.roots == 2);
        CHECK(r.magnitude_matches);
        CHECK(r.family_nonlinearity == 384); // 2^9 - 2^4 * 8
    }
    // m = 6 with u = 2^(m/2) + 2^((m+2)/4) + 1 = 13
    ThreeValuedReport r6 = three_valued_report(13, 6);
    CHECK(r6.three_valued);
    CHECK(r6.A == 16);
    CHECK(r6.roots == 4);
    CHECK(r6.magnitude_matches);
    CHECK(r6.family_nonlinearity == 1536);

    // a five-valued example for contrast
    CHECK_FALSE(three_valued_report(7, 4).three_valued);

    // the root count includes 0 and 1
    CHECK(count_niho_roots(3, 5) == 2);
    CHECK(count_niho_roots(13, 6) == 4);
}

TEST_CASE("linear inner maps: rank-driven nonlinearity") {
    auto tw = make_tower(3);
    std::vector<u32> notlin = identity_table(3);
    notlin[3] = 2;
    notlin[2] = 3; // still a permutation, no longer linear
    CHECK_THROWS(linear_h_analysis(0, notlin, tw));
    std::vector<u32> notbij(8, 0);
    CHECK_THROWS(linear_h_analysis(0, notbij, tw));

    // identity map: H(z) = z^(2^e + 1)
    LinearRankReport e1 = linear_h_analysis(1, identity_table(3), tw);
    CHECK(e1.r == 2);
    CHECK(e1.rank_counts == std::map<int, u64>{{2, 7}});
    CHECK(e1.nl_formula == 16);
    CHECK(e1.nl_exhaustive == 16);
    CHECK(e1.formula_matches);
    CHECK(e1.plateau_bound == 16); // 2^5 - 2^4
    CHECK(e1.attains_bound);
    CHECK(e1.rank_condition);

    // e = 0 squares the input: every component collapses to a linear map
    LinearRankReport e0 = linear_h_analysis(0, identity_table(3), tw);
    CHECK(e0.r == 0);
    CHECK(e0.nl_exhaustive == 0);
    CHECK(e0.formula_matches);
    CHECK_FALSE(e0.attains_bound);
}

TEST_CASE("rank formula matches the exhaustive scan for every small exponent") {
    for (int m : {2, 3, 4, 5}) {
        auto tw = make_tower(m);
        for (int e = 0; e < m; ++e) {
            LinearRankReport r = linear_h_analysis(e, identity_table(m), tw);
            CHECK(r.formula_matches);
            // the plateau bound is attained exactly at exponents coprime to m,
            // except that at m = 2 the bound degenerates to 0 and e = 0
            // attains it trivially
            bool coprime = std::gcd(e, m) == 1;
            if (m == 2)
                CHECK(r.attains_bound);
            else
                CHECK(r.attains_bound == coprime);
            CHECK(r.attains_bound == r.rank_condition);
        }
    }
}

TEST_CASE("exponent pairs with a common factor can still attain the bound") {
    // at m = 6, e = 2: gcd(e, m) = 2, yet every component has rank 4 =
    // 2*(m/2 - 1), so the bound is attained without coprimality
    auto tw = make_tower(6);
    LinearRankReport r = linear_h_analysis(2, identity_table(6), tw);
    CHECK(r.rank_counts == std::map<int, u64>{{4, 63}});
    CHECK(r.r == 4);
    CHECK(r.nl_exhaustive == 1536);
    CHECK(r.attains_bound);
    CHECK(r.rank_condition);
    CHECK(std::gcd(2, 6) != 1);

    // e = 3 splits the components into linear ones and full-rank ones
    LinearRankReport r3 = linear_h_analysis(3, identity_table(6), tw);
    CHECK(r3.rank_counts == std::map<int, u64>{{0, 7}, {6, 56}});
    CHECK(r3.nl_exhaustive == 0);
}

TEST_CASE("derivative linearity of duals") {
    auto half = make_field(3);
    Domain d = Domain::over_product(half);

    // dual of the bilinear pairing Tr(y z) is again bilinear: condition holds
    TruthTable g(6);
    for (u32 v = 0; v < 64; ++v)
        g.set(v, half->trace_bit(half->mul(d.hi(v), d.lo(v))));
    TruthTable gs = dual_of_bent(g, d);
    CHECK(condition_a_check(gs, {1, 2, 4}));

    CHECK_THROWS(condition_a_check(gs, {}));
    CHECK_THROWS(condition_a_check(gs, {1, 2, 3}));  // dependent
    CHECK_THROWS(condition_a_check(gs, {0, 2, 4}));  // zero direction
    CHECK_THROWS(condition_a_check(gs, {64}));       // out of range

    // dual of a bent function with a nonlinear inner permutation fails
    Rng rng(11);
    auto pi = rng.permutation(8);
    TruthTable f(6);
    for (u32 v = 0; v < 64; ++v)
        f.set(v, half->trace_bit(half->mul(d.hi(v), pi[d.lo(v)])));
    TruthTable fs = dual_of_bent(f, d);
    int failures = 0;
    for (const std::vector<u32>& dirs :
         {std::vector<u32>{1, 2, 4}, {1, 2, 8}, {3, 5, 9}, {7, 11, 29}, {1, 6, 24}})
        failures += !condition_a_check(fs, dirs);
    CHECK(failures > 0);
}

TEST_CASE("self-dual bases exist and satisfy the trace pairing") {
    CHECK(self_dual_basis(*make_field(3)) == std::vector<u32>{3, 5, 7});
    for (int m = 2; m <= 6; ++m) {
        auto f = make_field(m);
        auto b = self_dual_basis(*f);
        REQUIRE(int(b.size()) == m);
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                CHECK(f->trace_bit(f->mul(b[i], b[j])) == int(i == j));
    }
}

TEST_CASE("perturbed norm form with subfield coefficients") {
    auto tw = make_tower(3);
    auto R = ReducedPolynomial::product_of_all(3);
    CHECK_THROWS(niho_general(3, {5}, R, tw));          // arity mismatch
    CHECK_THROWS(niho_general(3, {5, 1}, R, tw));       // Tr(3*1) = 1
    CHECK_THROWS(niho_general(8, {5, 7}, R, tw));       // u1 outside subfield
    CHECK_THROWS(niho_general(3, {5, 7},
                              ReducedPolynomial::zero(2), tw)); // k < 3

    // self-dual basis: u1 = 3, directions {5, 7}; trace pairings vanish
    VectorialFunction F = niho_general(3, {5, 7}, R, tw);
    AnalysisReport rep = analyze(F);
    CHECK(rep.bent_count == 56);
    CHECK(rep.is_maximal);
    CHECK(rep.s_f.equals_subfield);
    CHECK(niho_general_dual_check(F, 3, {5, 7}, R, *tw));

    // with the zero switch the function is the plain norm form, so the check
    // reduces to the closed form of the dual of each norm component
    auto Z = ReducedPolynomial::zero(3);
    VectorialFunction N = niho_general(3, {5, 7}, Z, tw);
    for (u32 x = 0; x < 64; ++x)
        CHECK(N(x) == tw->big().mul(tw->big().frobenius(x, 3), x));
    CHECK(niho_general_dual_check(N, 3, {5, 7}, Z, *tw));
}

TEST_CASE("derivatives of the norm dual are affine with the stated coefficients") {
    for (int m : {3, 4}) {
        auto tw = make_tower(m);
        auto sdb = self_dual_basis(tw->small());
        std::vector<u32> us(sdb.begin() + 1, sdb.end());
        int checked = 0;
        for (u32 b = 1; b < (u32(1) << 2 * m) && checked < 4; ++b) {
            if (tw->in_image(b)) continue;
            CHECK(niho_dual_derivative_check(*tw, sdb[0], us, b));
            ++checked;
        }
        CHECK_THROWS(niho_dual_derivative_check(*tw, sdb[0], us, tw->embed(1)));
    }
}

TEST_CASE("full-arity switch with a self-dual basis reaches algebraic degree m") {
    for (int m : {3, 4}) {
        auto tw = make_tower(m);
        auto sdb = self_dual_basis(tw->small());
        std::vector<u32> us(sdb.begin() + 1, sdb.end());
        auto R = ReducedPolynomial::product_of_all(m);
        VectorialFunction F = niho_general(sdb[0], us, R, tw);
        CHECK(analyze(F).is_maximal);
        for (u32 c = 1; c < (u32(1) << 2 * m); ++c) {
            if (tw->in_image(c)) continue;
            CHECK(algebraic_degree(component(F, c)) == m);
        }
    }
}

TEST_CASE("dual-derivative linearity holds for the norm dual directions") {
    for (int m : {3, 4}) {
        auto tw = make_tower(m);
        auto sdb = self_dual_basis(tw->small());
        VectorialFunction N = niho_k2(0, 0, tw); // plain norm form
        u32 b = 0;
        for (u32 c = 1; c < (u32(1) << 2 * m); ++c)
            if (!tw->in_image(c)) { b = c; break; }
        TruthTable dual = dual_of_bent(component(N, b), N.domain());
        std::vector<u32> dirs{tw->big().mul(b, tw->embed(sdb[0]))};
        for (size_t i = 1; i < sdb.size(); ++i) dirs.push_back(tw->embed(sdb[i]));
        CHECK(condition_a_check(dual, dirs));
    }
}

TEST_CASE("two-term perturbation: parameter enumeration and validation") {
    auto tw = make_tower(3);
    CHECK_THROWS(niho_k2(1, 1, tw)); // u1*u2^8 = 1 has trace 1 over F_8

    auto all = niho_k2_parameters(*tw);
    auto outside = niho_k2_parameters(*tw, true);
    CHECK(all.size() == 316);
    CHECK(outside.size() == 168);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (auto [u1, u2] : outside) {
        CHECK_FALSE(tw->in_image(u1));
        CHECK_FALSE(tw->in_image(u2));
    }

    // the zero pair passes the preconditions and gives the plain norm form
    VectorialFunction N = niho_k2(0, 0, tw);
    CHECK(analyze(N).bent_count == 56);
}

TEST_CASE("two-term perturbation: every valid pair keeps the maximal count") {
    auto tw = make_tower(3);
    for (auto [u1, u2] : niho_k2_parameters(*tw, true)) {
        VectorialFunction F = niho_k2(u1, u2, tw);
        CHECK(probe_maximal(F).maximal);
    }
}

TEST_CASE("two-term perturbation: dual identity outside the subfield copy") {
    auto tw = make_tower(3);
    auto outside = niho_k2_parameters(*tw, true);
    for (size_t i = 0; i < outside.size(); i += 7) { // every 7th of 168
        auto [u1, u2] = outside[i];
        CHECK(niho_k2_dual_check(niho_k2(u1, u2, tw), u1, u2, *tw));
    }
}

TEST_CASE("two-term perturbation: subfield components are products of two "
          "linear forms") {
    auto tw = make_tower(3);
    int dependent_seen = 0;
    for (auto [u1, u2] : niho_k2_parameters(*tw, true)) {
        VectorialFunction F = niho_k2(u1, u2, tw);
        RtCheck rt = niho_k2_subfield_spectrum_check(F, u1, u2, *tw);
        CHECK(rt.ok);
        dependent_seen += rt.any_dependent;
    }
    // u2/u1 always lies in the subfield copy, so the one-point spectrum case
    // is forced at exactly that component for every nonzero pair...
    CHECK(dependent_seen == 168);
}

TEST_CASE("two-term perturbation: one linear component drags the "
          "nonlinearity to zero") {
    // ...and a linear component means the vectorial nonlinearity is 0 even
    // though the independent-case components each reach 2^(n-2)
    auto tw = make_tower(3);
    auto [u1, u2] = niho_k2_parameters(*tw, true).front();
    VectorialFunction F = niho_k2(u1, u2, tw);
    ComponentScan scan = scan_components(F);
    CHECK(scan.nonlinearity == 0);
    CHECK(tw->in_image(scan.nonlinearity_argmin));

    const Field& big = tw->big();
    for (u32 bs = 1; bs < 8; ++bs) {
        u32 b = tw->embed(bs);
        u32 p = big.mul(b, u1);
        WalshSpectrum s = walsh_spectrum(component(F, b), F.domain());
        if (p == u2) // the forced dependent component is linear
            CHECK(nonlinearity_bool(s) == 0);
        else // independent case: four-point spectrum at half the maximum
            CHECK(nonlinearity_bool(s) == 16); // 2^(n-2), n = 6
    }
}

TEST_CASE("two-term perturbation: differential rows split by one trace bit") {
    auto tw = make_tower(3);
    auto outside = niho_k2_parameters(*tw, true);
    CHECK_THROWS(niho_k2_diff_check(niho_k2(0, 0, tw), 0, 0, *tw));
    for (size_t i = 0; i < outside.size(); i += 11) {
        auto [u1, u2] = outside[i];
        DiffRowCheck dc = niho_k2_diff_check(niho_k2(u1, u2, tw), u1, u2, *tw);
        CHECK(dc.ok);
        CHECK(dc.values_bit1 == std::set<u64>{0, 2});
        CHECK(dc.values_bit0 == std::set<u64>{0, 4, 8});
    }
}

TEST_CASE("product-domain family: construction and validation") {
    auto half = make_field(3);
    auto R2 = ReducedPolynomial::zero(2);
    CHECK_THROWS(mm_construct(MMParams{1, 1, {{2, 2}}, R2}, half)); // 2 != phi(2)
    CHECK_THROWS(mm_construct(MMParams{1, 1, {{half->frobenius(5, 1), 5}}, R2},
                              half)); // trace pairing violated: Tr(phi^-1(1)*5)=1
    CHECK_THROWS(mm_construct(MMParams{1, 1, {{4, 2}, {6, 4}, {5, 7}},
                                       ReducedPolynomial::zero(4)},
                              half)); // k > m

    // unperturbed: the zero switch leaves (y z^(2^j), z)
    MMParams plain{1, 1, {{4, 2}}, R2};
    VectorialFunction G = mm_construct(plain, half);
    Domain d = G.domain();
    for (u32 v = 0; v < 64; ++v) {
        u32 y = d.hi(v), z = d.lo(v);
        CHECK(G(v) == d.pack(half->mul(y, half->sqr(z)), z));
    }
    AnalysisReport rep = analyze(G);
    CHECK(rep.bent_count == 56);
    CHECK(rep.is_maximal);
    // the expected non-bent components sit on {0} x F_{2^m}
    CHECK(rep.s_f.size == 7);
    CHECK(rep.s_f.is_subspace);
    CHECK(rep.s_f.equals_subfield);
}

TEST_CASE("product-domain family: perturbed counts, duals, and the "
          "second-derivative certificate") {
    auto half = make_field(3);
    for (int j : {1, 2}) {
        // directions satisfying u_{i,1} = phi(u_{i,2}) and the trace pairing
        u32 u11 = 1;
        u32 w = half->frobenius(u11, -j);
        std::vector<std::pair<u32, u32>> us;
        for (u32 v = 1; v < 8 && us.size() < 2; ++v)
            if (!half->trace_bit(half->mul(w, v)))
                us.emplace_back(half->frobenius(v, j), v);
        REQUIRE(us.size() == 2);
        MMParams p{j, u11, us, ReducedPolynomial::product_of_all(3)};
        VectorialFunction F = mm_construct(p, half);

        AnalysisReport rep = analyze(F);
        CHECK(rep.bent_count == 56);
        CHECK(rep.is_maximal);

        Domain d = F.domain();
        int completeness_failures = 0;
        for (u32 a = 1; a < 8; ++a)
            for (u32 b = 0; b < 8; ++b) {
                CHECK(mm_dual_check(F, p, a, b));
                completeness_failures +=
                    !mm_completeness_test(component(F, d.pack(a, b)), d);
            }
        // every perturbed component leaves the fixed-first-factor class
        CHECK(completeness_failures == 56);

        // while the unperturbed map stays inside it
        MMParams plain{j, u11, {us[0]}, ReducedPolynomial::zero(2)};
        VectorialFunction G = mm_construct(plain, half);
        for (u32 a = 1; a < 8; ++a)
            for (u32 b = 0; b < 8; ++b)
                CHECK(mm_completeness_test(component(G, d.pack(a, b)), d));
    }
}

TEST_CASE("second-derivative certificate needs a product domain") {
    auto f = make_field(4);
    TruthTable t(4);
    CHECK_THROWS(mm_completeness_test(t, Domain::over_field(f)));
}

TEST_CASE("binomial family: maximal exactly at the norm-like exponent") {
    for (int m = 2; m <= 5; ++m) {
        auto tw = make_tower(m);
        CHECK_THROWS(binomial_pair(-1, tw));
        CHECK_THROWS(binomial_pair(m, tw));
        for (int i = 0; i < m; ++i) {
            VectorialFunction F = binomial_pair(i, tw);
            CHECK(probe_maximal(F).maximal == (i == 0));
        }
    }
}

TEST_CASE("binomial components are bent exactly when the linearized kernel "
          "is trivial") {
    auto tw = make_tower(3);
    for (int i = 0; i < 3; ++i) {
        VectorialFunction F = binomial_pair(i, tw);
        for (u32 a = 1; a < 64; ++a) {
            bool bent = is_bent(walsh_spectrum(component(F, a), F.domain()));
            CHECK(bent == (linearized_roots(a, i, *tw).size() == 1));
        }
    }
    CHECK_THROWS(linearized_roots(0, 1, *tw));
}

TEST_CASE("binomial witnesses certify the non-maximal exponents") {
    // smallest out-of-subfield coefficients with a nontrivial kernel
    auto t3 = make_tower(3);
    CHECK(binomial_nonbent_witness(0, *t3) == std::nullopt);
    CHECK(binomial_nonbent_witness(1, *t3) == 3u);
    CHECK(binomial_nonbent_witness(2, *t3) == 2u);
    auto t5 = make_tower(5);
    CHECK(binomial_nonbent_witness(0, *t5) == std::nullopt);
    CHECK(binomial_nonbent_witness(1, *t5) == 8u);

    for (int m = 2; m <= 5; ++m) {
        auto tw = make_tower(m);
        for (int i = 1; i < m; ++i) {
            auto w = binomial_nonbent_witness(i, *tw);
            REQUIRE(w.has_value());
            CHECK_FALSE(tw->in_image(*w));
            CHECK(linearized_roots(*w, i, *tw).size() > 1);
            VectorialFunction F = binomial_pair(i, tw);
            CHECK_FALSE(is_bent(walsh_spectrum(component(F, *w), F.domain())));
        }
    }
}

TEST_CASE("closed-form witness from a root of unity in the kernel subfield") {
    // available exactly when the dyadic valuations of i and m agree
    auto t3 = make_tower(3);
    auto w31 = binomial_explicit_witness(1, *t3);
    REQUIRE(w31.has_value());
    CHECK(*w31 == 14);
    CHECK_FALSE(t3->in_image(*w31));
    // d = gcd(m+i, 2m) = 2: the kernel contains the full 4-element subfield
    auto roots = linearized_roots(*w31, 1, *t3);
    CHECK(roots.size() == 16);
    const Field& big = t3->big();
    u32 cube_root = big.exp_g(big.order() / 3);
    for (u32 r : {0u, 1u, cube_root, big.sqr(cube_root)})
        CHECK(std::binary_search(roots.begin(), roots.end(), r));

    CHECK(binomial_explicit_witness(2, *t3) == std::nullopt); // v2 mismatch
    CHECK(binomial_explicit_witness(0, *t3) == std::nullopt);

    auto t5 = make_tower(5);
    for (int i : {1, 3}) {
        auto w = binomial_explicit_witness(i, *t5);
        REQUIRE(w.has_value());
        CHECK(*w == 42);
        CHECK_FALSE(t5->in_image(*w));
        CHECK(linearized_roots(*w, i, *t5).size() == 4);
    }
    CHECK(binomial_explicit_witness(2, *t5) == std::nullopt);
    auto t4 = make_tower(4);
    for (int i = 1; i < 4; ++i)
        CHECK(binomial_explicit_witness(i, *t4) == std::nullopt);
}

TEST_CASE("trace-kernel counts over intermediate subfields") {
    CHECK_THROWS(count_N_set(4, 4)); // d must be proper
    CHECK_THROWS(count_N_set(6, 4)); // d must divide

    NSetCount a = count_N_set(4, 2);
    CHECK(a.count == 3);
    CHECK(a.t == 1);
    CHECK(a.closed_form_applies);
    CHECK(a.closed_form == 3);

    CHECK(count_N_set(6, 3).count == 7);
    CHECK(count_N_set(8, 2).count == 63);
    CHECK(count_N_set(8, 4).count == 15);
    CHECK(count_N_set(9, 3).count == 63);

    // gcd(2^d - 1, m/d) > 1: closed form off, count still nonzero
    NSetCount b = count_N_set(6, 2);
    CHECK(b.t == 3);
    CHECK_FALSE(b.closed_form_applies);
    CHECK(b.count == 27);
}
