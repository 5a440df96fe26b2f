#include "bentcomp/constructions.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bentcomp {

namespace {

int resolve_jobs(int jobs) {
#ifdef _OPENMP
    return jobs <= 0 ? omp_get_max_threads() : jobs;
#else
    (void)jobs;
    return 1;
#endif
}

u64 pw2(int e) { return u64(1) << e; }

int val2(u64 x) { return __builtin_ctzll(x); } // x > 0

u64 modpow2(int e, u64 mod) { // 2^e mod `mod`
    u64 r = 1 % mod;
    for (int i = 0; i < e; ++i) r = (r * 2) % mod;
    return r;
}

std::string hexstr(u32 v) {
    char b[16];
    std::snprintf(b, sizeof b, "0x%x", v);
    return b;
}

// x^(2^m + 1), the product of x with its conjugate over the half-degree
// subfield
u32 norm_form(const Field& big, int m, u32 x) {
    return big.mul(big.frobenius(x, m), x);
}

// Tr_{2^m/2}(A) for A in the embedded subfield copy
int sub_trace_bit(const Tower& tw, u32 A) {
    return tw.small().trace_bit(tw.project(A));
}

int f2_rank(const std::vector<u32>& vecs) {
    u32 pivots[32] = {};
    int r = 0;
    for (u32 v : vecs) {
        while (v) {
            int h = bitlen(v) - 1;
            if (!pivots[h]) {
                pivots[h] = v;
                ++r;
                break;
            }
            v ^= pivots[h];
        }
    }
    return r;
}

// Kernel basis of the F_2-linear map whose value on basis vector 1<<t is
// cols[t].  Because the input space is indexed by masks, each returned tag is
// itself an element mapped to zero.
std::vector<u32> f2_kernel_basis(const std::vector<u32>& cols) {
    u32 pv[32] = {}, pt[32] = {};
    std::vector<u32> kernel;
    for (size_t t = 0; t < cols.size(); ++t) {
        u32 vec = cols[t], tag = u32(1) << t;
        while (vec) {
            int h = bitlen(vec) - 1;
            if (!pv[h]) {
                pv[h] = vec;
                pt[h] = tag;
                break;
            }
            vec ^= pv[h];
            tag ^= pt[h];
        }
        if (!vec) kernel.push_back(tag);
    }
    return kernel;
}

std::vector<u32> span_of(const std::vector<u32>& basis) {
    std::vector<u32> s{0};
    for (u32 b : basis) {
        size_t sz = s.size();
        for (size_t i = 0; i < sz; ++i) s.push_back(s[i] ^ b);
    }
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

// --- ReducedPolynomial -----------------------------------------------------

ReducedPolynomial::ReducedPolynomial(int k, TruthTable values)
    : k_(k), t_(std::move(values)) {
    if (k < 2) throw std::invalid_argument("switch polynomial needs k >= 2");
    if (t_.n() != k - 1)
        throw std::invalid_argument("switch polynomial value table must have k-1 inputs");
}

ReducedPolynomial ReducedPolynomial::zero(int k) {
    if (k < 2) throw std::invalid_argument("switch polynomial needs k >= 2");
    return ReducedPolynomial(k, TruthTable(k - 1));
}

ReducedPolynomial ReducedPolynomial::single_variable(int k, int which) {
    if (which < 2 || which > k)
        throw std::invalid_argument("variable index out of range");
    TruthTable t(k - 1);
    for (u32 a = 0; a < t.size(); ++a) t.set(a, (a >> (which - 2)) & 1);
    return ReducedPolynomial(k, std::move(t));
}

ReducedPolynomial ReducedPolynomial::product_of_all(int k) {
    if (k < 2) throw std::invalid_argument("switch polynomial needs k >= 2");
    TruthTable t(k - 1);
    t.set(t.size() - 1, 1);
    return ReducedPolynomial(k, std::move(t));
}

ReducedPolynomial ReducedPolynomial::random(int k, Rng& rng) {
    if (k < 2) throw std::invalid_argument("switch polynomial needs k >= 2");
    TruthTable t(k - 1);
    for (u32 a = 0; a < t.size(); ++a) t.set(a, rng.bit());
    return ReducedPolynomial(k, std::move(t));
}

// --- trace-composition family ----------------------------------------------

TracePermPair trace_perm(int e, const std::vector<u32>& h,
                         std::shared_ptr<const Tower> tw) {
    if (!tw) throw std::invalid_argument("tower required");
    if (e < 0) throw std::invalid_argument("exponent index must be nonnegative");
    const Field& big = tw->big();
    const Field& small = tw->small();
    int m = tw->m(), n = tw->n();
    u32 szm = u32(1) << m;
    if (h.size() != szm)
        throw std::invalid_argument("inner permutation table has wrong size");
    std::vector<char> seen(szm, 0);
    for (u32 v : h) {
        if (v >= szm || seen[v])
            throw std::invalid_argument("inner table is not a permutation");
        seen[v] = 1;
    }

    std::vector<u32> ft(u64(1) << n);
    for (u32 x = 0; x < ft.size(); ++x) {
        u32 tr = x ^ big.frobenius(x, m); // Tr_{2^n/2^m}(x), lands in the image
        ft[x] = big.mul(big.frobenius(x, e), tw->embed(h[tw->project(tr)]));
    }
    std::vector<u32> ht(szm);
    for (u32 z = 0; z < szm; ++z) ht[z] = small.mul(small.frobenius(z, e), h[z]);

    TracePermPair p{
        VectorialFunction(Domain::over_field(tw), std::move(ft),
                          "x^(2^" + std::to_string(e) + ")*h(Tr[" + std::to_string(n) +
                              "/" + std::to_string(m) + "](x))"),
        VectorialFunction(Domain::over_field(tw->small_ptr()), std::move(ht),
                          "x^(2^" + std::to_string(e) + ")*h(x)"),
        e, tw};
    return p;
}

bool verify_walsh_factorization(const TracePermPair& p, int jobs) {
    const Tower& tw = *p.tower;
    int m = tw.m(), n = tw.n();
    u32 szm = u32(1) << m, szn = u32(1) << n;
    u32 max_h = 0;
    for (u32 a = 1; a < szm; ++a) {
        WalshSpectrum wf = walsh_spectrum(component(p.F, tw.embed(a)), p.F.domain());
        WalshSpectrum wh = walsh_spectrum(component(p.H, a), p.H.domain());
        max_h = std::max(max_h, u32(wh.max_abs()));
        for (u32 w = 0; w < szn; ++w) {
            int want = tw.in_image(w) ? wh.v[tw.project(w)] * (1 << m) : 0;
            if (wf.v[w] != want) return false;
        }
    }
    u64 predicted = pw2(n - 1) - pw2(m - 1) * max_h;
    return scan_components(p.F, jobs).nonlinearity == predicted;
}

// --- monomial inner maps -----------------------------------------------------

MonomialTraceStats monomial_trace_stats(u64 u, int m, int e) {
    if (m < 2 || m > 16) throw std::invalid_argument("half degree out of range");
    if (e < 0) throw std::invalid_argument("exponent index must be nonnegative");
    u64 q1 = pw2(m) - 1;
    u64 um = u % q1;
    for (int j = 0; j < m; ++j)
        if (um == pw2(j) % q1)
            throw std::invalid_argument("exponent collapses to a linear power");
    if (std::gcd(um, q1) != 1)
        throw std::invalid_argument("exponent is not coprime to the group order");
    u64 shift = (um + q1 - modpow2(e % m, q1)) % q1; // 2^e mod q1 has period m
    if (std::gcd(shift, q1) != 1)
        throw std::invalid_argument("inner map is not a permutation");

    auto f = make_field(m);
    TruthTable t(m);
    for (u32 x = 0; x < t.size(); ++x)
        t.set(x, f->trace_bit(f->pow(x, i64(um))));
    WalshSpectrum s = walsh_spectrum(t, Domain::over_field(f));

    MonomialTraceStats r;
    r.m = m;
    r.e = e;
    r.u = u;
    r.max_abs_walsh = u32(s.max_abs());
    r.family_nonlinearity = pw2(2 * m - 1) - pw2(m - 1) * r.max_abs_walsh;
    r.lower_bound = pw2(m / 2 + 1);
    r.bound_holds = r.max_abs_walsh >= r.lower_bound;
    for (int v : s.v) ++r.value_counts[v];
    return r;
}

NihoExponent niho_exponent(int t, int s, int e) {
    if (t < 1 || t > 30) throw std::invalid_argument("half-exponent parameter out of range");
    if (e < 0 || e > 60) throw std::invalid_argument("exponent index out of range");
    i64 top = i64(pw2(t)) - 1;
    if (s <= 0 || i64(s) >= top)
        throw std::invalid_argument("multiplier must lie strictly between 0 and 2^t - 1");
    u64 mod = pw2(t) + 1;
    u64 diff = (modpow2(e, mod) + mod - u64(s) % mod) % mod;
    if (std::gcd(diff, mod) != 1)
        throw std::invalid_argument("2^e - s shares a factor with 2^t + 1");
    NihoExponent r;
    r.t = t;
    r.s = s;
    r.e = e;
    r.u = u64(s) * (pw2(t) - 1) + pw2(e + 1);
    r.divisor = u32(pw2(t));
    r.min_max_abs = u32(pw2(t + 1));
    return r;
}

u64 count_niho_roots(u64 u, int m) {
    if (m < 2 || m > 20) throw std::invalid_argument("half degree out of range");
    if (u == 0 || u > u64(INT64_MAX)) throw std::invalid_argument("exponent out of range");
    auto f = make_field(m);
    u64 cnt = 0;
    for (u32 x = 0; x < f->size(); ++x)
        if ((f->pow(x ^ 1u, i64(u)) ^ f->pow(x, i64(u)) ^ 1u) == 0) ++cnt;
    return cnt;
}

ThreeValuedReport three_valued_report(u64 u, int m) {
    if (m < 2 || m > 16) throw std::invalid_argument("half degree out of range");
    if (u == 0 || u > u64(INT64_MAX)) throw std::invalid_argument("exponent out of range");
    auto f = make_field(m);
    TruthTable t(m);
    for (u32 x = 0; x < t.size(); ++x) t.set(x, f->trace_bit(f->pow(x, i64(u))));
    WalshSpectrum s = walsh_spectrum(t, Domain::over_field(f));

    ThreeValuedReport r;
    r.A = u32(s.max_abs());
    r.three_valued = true;
    for (int v : s.v)
        if (v != 0 && v != int(r.A) && v != -int(r.A)) r.three_valued = false;
    r.roots = count_niho_roots(u, m);
    bool pow2ok = r.A != 0 && (r.A & (r.A - 1)) == 0;
    r.magnitude_matches = pow2ok && u64(r.A) * r.A == pw2(m) * r.roots;
    r.family_nonlinearity = pw2(2 * m - 1) - pw2(m - 1) * r.A;
    return r;
}

// --- linear inner maps -------------------------------------------------------

LinearRankReport linear_h_analysis(int e, const std::vector<u32>& h,
                                   std::shared_ptr<const Tower> tw, int jobs) {
    if (!tw) throw std::invalid_argument("tower required");
    int m = tw->m(), n = tw->n();
    u32 szm = u32(1) << m;
    if (h.size() != szm) throw std::invalid_argument("inner table has wrong size");
    if (h[0] != 0) throw std::invalid_argument("inner map is not linear");
    std::vector<u32> basis_images(m);
    for (int j = 0; j < m; ++j) basis_images[j] = h[u32(1) << j];
    for (u32 x = 0; x < szm; ++x) {
        u32 want = 0;
        for (u32 t = x; t; t &= t - 1) want ^= basis_images[ctz(t)];
        if (h[x] != want) throw std::invalid_argument("inner map is not linear");
    }
    if (f2_rank(basis_images) != m)
        throw std::invalid_argument("inner map is not bijective");

    TracePermPair p = trace_perm(e, h, tw);

    LinearRankReport r;
    r.m = m;
    r.e = e;
    int rmin = n; // ranks never exceed m < n
    for (u32 a = 1; a < szm; ++a) {
        int ra = quadratic_rank(component(p.H, a));
        ++r.rank_counts[ra];
        rmin = std::min(rmin, ra);
    }
    r.r = rmin;
    r.nl_formula = pw2(n - 1) - pw2(n - rmin / 2 - 1);
    r.nl_exhaustive = scan_components(p.F, jobs).nonlinearity;
    r.formula_matches = r.nl_formula == r.nl_exhaustive;
    r.plateau_bound = pw2(n - 1) - pw2(3 * n / 4);
    r.attains_bound = r.nl_exhaustive == r.plateau_bound;
    r.rank_condition = rmin == 2 * ((m + 1) / 2 - 1);
    return r;
}

// --- dual-derivative linearity ----------------------------------------------

bool condition_a_check(const TruthTable& fstar, const std::vector<u32>& us) {
    if (us.empty()) throw std::invalid_argument("need at least one direction");
    for (u32 u : us)
        if (u == 0 || u >= fstar.size())
            throw std::invalid_argument("direction out of range");
    if (f2_rank(us) != int(us.size()))
        throw std::invalid_argument("directions must be linearly independent");

    int k = int(us.size());
    u32 sz = fstar.size();
    for (u32 x = 0; x < sz; ++x) {
        int fx = fstar.get(x);
        for (u32 w = 1; w < (u32(1) << k); ++w) {
            u32 shift = 0;
            int rhs = fx;
            for (u32 t = w; t; t &= t - 1) {
                int i = ctz(t);
                shift ^= us[i];
                rhs ^= fstar.get(x ^ us[i]) ^ fx;
            }
            if (fstar.get(x ^ shift) != rhs) return false;
        }
    }
    return true;
}

std::vector<u32> self_dual_basis(const Field& f) {
    int m = f.degree();
    std::vector<u32> cand;
    for (u32 u = 1; u < f.size(); ++u)
        if (f.trace_bit(f.mul(u, u))) cand.push_back(u);
    std::vector<u32> picked;
    std::function<bool(size_t)> rec = [&](size_t from) {
        if (int(picked.size()) == m) return true;
        for (size_t c = from; c < cand.size(); ++c) {
            u32 u = cand[c];
            bool ok = true;
            for (u32 p : picked)
                if (f.trace_bit(f.mul(u, p))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            picked.push_back(u);
            if (rec(c + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    if (!rec(0)) throw std::runtime_error("no self-dual basis found");
    return picked;
}

// --- perturbed norm form, subfield coefficients -------------------------------

VectorialFunction niho_general(u32 u1, const std::vector<u32>& us,
                               const ReducedPolynomial& R,
                               std::shared_ptr<const Tower> tw) {
    if (!tw) throw std::invalid_argument("tower required");
    const Field& big = tw->big();
    const Field& small = tw->small();
    int m = tw->m(), n = tw->n();
    int k = R.k();
    if (int(us.size()) != k - 1)
        throw std::invalid_argument("direction count must match switch arity");
    if (k < 3 || k > m) throw std::invalid_argument("need 3 <= k <= m");
    u32 szm = u32(1) << m;
    if (u1 >= szm) throw std::invalid_argument("scale coefficient outside subfield");
    for (u32 ui : us) {
        if (ui >= szm) throw std::invalid_argument("trace coefficient outside subfield");
        if (small.trace_bit(small.mul(u1, ui)))
            throw std::invalid_argument("trace pairing of coefficients must vanish");
    }

    u32 U1 = tw->embed(u1);
    std::vector<u32> Ui(us.size());
    for (size_t i = 0; i < us.size(); ++i) Ui[i] = tw->embed(us[i]);

    std::vector<u32> ft(u64(1) << n);
    for (u32 x = 0; x < ft.size(); ++x) {
        u32 args = 0;
        for (size_t i = 0; i < Ui.size(); ++i)
            args |= u32(big.trace_bit(big.mul(Ui[i], x))) << i;
        ft[x] = norm_form(big, m, x) ^ (R.eval(args) ? big.mul(U1, x) : 0);
    }
    std::string desc = "x^(2^" + std::to_string(m) + "+1) + " + hexstr(u1) + "*x*R(";
    for (size_t i = 0; i < us.size(); ++i)
        desc += std::string(i ? "," : "") + "Tr(" + hexstr(us[i]) + "*x)";
    desc += ")";
    return VectorialFunction(Domain::over_field(tw), std::move(ft), desc);
}

bool niho_general_dual_check(const VectorialFunction& F, u32 u1,
                             const std::vector<u32>& us,
                             const ReducedPolynomial& R, const Tower& tw) {
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 szn = u32(1) << n;
    u32 U1 = tw.embed(u1);
    std::vector<u32> Ui(us.size());
    for (size_t i = 0; i < us.size(); ++i) Ui[i] = tw.embed(us[i]);

    TruthTable gstar(n);
    for (u32 b = 0; b < szn; ++b) {
        if (tw.in_image(b)) continue;
        TruthTable comp = component(F, b);
        WalshSpectrum spec = walsh_spectrum(comp, F.domain());
        if (!is_bent(spec)) return false;
        TruthTable dual = dual_of_bent(comp, F.domain());

        u32 g = b ^ big.frobenius(b, m);
        u32 ginv = big.inv(g);
        for (u32 x = 0; x < szn; ++x)
            gstar.set(x, sub_trace_bit(tw, big.mul(ginv, norm_form(big, m, x))) ^ 1);

        u32 d1 = big.mul(b, U1);
        for (u32 x = 0; x < szn; ++x) {
            u32 args = 0;
            for (size_t i = 0; i < Ui.size(); ++i)
                args |= u32(gstar.get(x ^ Ui[i]) ^ gstar.get(x)) << i;
            int want = gstar.get(x) ^
                       ((gstar.get(x ^ d1) ^ gstar.get(x)) & R.eval(args));
            if (dual.get(x) != want) return false;
        }
    }
    return true;
}

bool niho_dual_derivative_check(const Tower& tw, u32 u1,
                                const std::vector<u32>& us, u32 b) {
    if (tw.in_image(b))
        throw std::invalid_argument("component index must avoid the subfield copy");
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 szn = u32(1) << n;
    u32 U1 = tw.embed(u1);

    u32 g = b ^ big.frobenius(b, m);
    u32 ginv = big.inv(g);
    TruthTable gstar(n);
    for (u32 x = 0; x < szn; ++x)
        gstar.set(x, sub_trace_bit(tw, big.mul(ginv, norm_form(big, m, x))) ^ 1);

    // direction b*u1: coefficient g^-1 u1 b^(2^m), constant Tr(g^-1 b^(2^m+1) u1^2)
    u32 d1 = big.mul(b, U1);
    u32 c1 = big.mul(ginv, big.mul(U1, big.frobenius(b, m)));
    int k1 = sub_trace_bit(
        tw, big.mul(ginv, big.mul(norm_form(big, m, b), big.sqr(U1))));
    for (u32 x = 0; x < szn; ++x) {
        int got = gstar.get(x ^ d1) ^ gstar.get(x);
        if (got != (big.trace_bit(big.mul(c1, x)) ^ k1)) return false;
    }

    // direction u_i: coefficient g^-1 u_i, constant Tr(g^-1 u_i^2)
    for (u32 ui : us) {
        u32 Uj = tw.embed(ui);
        u32 ci = big.mul(ginv, Uj);
        int ki = sub_trace_bit(tw, big.mul(ginv, big.sqr(Uj)));
        for (u32 x = 0; x < szn; ++x) {
            int got = gstar.get(x ^ Uj) ^ gstar.get(x);
            if (got != (big.trace_bit(big.mul(ci, x)) ^ ki)) return false;
        }
    }
    return true;
}

// --- perturbed norm form, two terms, big-field coefficients -------------------

VectorialFunction niho_k2(u32 u1, u32 u2, std::shared_ptr<const Tower> tw) {
    if (!tw) throw std::invalid_argument("tower required");
    const Field& big = tw->big();
    int m = tw->m(), n = tw->n();
    u32 szn = u32(1) << n;
    if (u1 >= szn || u2 >= szn) throw std::invalid_argument("coefficient out of range");
    u32 P = big.mul(u1, big.frobenius(u2, m));
    if (!tw->in_image(P) || sub_trace_bit(*tw, P))
        throw std::invalid_argument(
            "u1*u2^(2^m) must lie in the subfield copy with zero trace");

    std::vector<u32> ft(szn);
    for (u32 x = 0; x < szn; ++x)
        ft[x] = norm_form(big, m, x) ^
                (big.trace_bit(big.mul(u2, x)) ? big.mul(u1, x) : 0);
    return VectorialFunction(
        Domain::over_field(tw), std::move(ft),
        "x^(2^" + std::to_string(m) + "+1) + " + hexstr(u1) + "*x*Tr[" +
            std::to_string(n) + "/1](" + hexstr(u2) + "*x)");
}

std::vector<std::pair<u32, u32>> niho_k2_parameters(const Tower& tw,
                                                    bool outside_subfield_only) {
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 szn = u32(1) << n;
    std::vector<std::pair<u32, u32>> out;
    for (u32 u1 = 0; u1 < szn; ++u1) {
        if (outside_subfield_only && tw.in_image(u1)) continue;
        for (u32 u2 = 0; u2 < szn; ++u2) {
            if (outside_subfield_only && tw.in_image(u2)) continue;
            u32 P = big.mul(u1, big.frobenius(u2, m));
            if (tw.in_image(P) && !sub_trace_bit(tw, P)) out.emplace_back(u1, u2);
        }
    }
    return out;
}

bool niho_k2_dual_check(const VectorialFunction& F, u32 u1, u32 u2,
                        const Tower& tw) {
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 szn = u32(1) << n;
    for (u32 b = 0; b < szn; ++b) {
        if (tw.in_image(b)) continue;
        TruthTable comp = component(F, b);
        WalshSpectrum spec = walsh_spectrum(comp, F.domain());
        if (!is_bent(spec)) return false;
        TruthTable dual = dual_of_bent(comp, F.domain());

        u32 l = b ^ big.frobenius(b, m);
        u32 linv = big.inv(l);
        u32 bu1 = big.mul(b, u1);
        u32 cA = big.mul(linv, big.frobenius(bu1, m));
        int kA = sub_trace_bit(tw, big.mul(linv, norm_form(big, m, bu1)));
        u32 cB = big.mul(linv, big.frobenius(u2, m));
        int kB = sub_trace_bit(tw, big.mul(linv, norm_form(big, m, u2)));

        for (u32 x = 0; x < szn; ++x) {
            int base = sub_trace_bit(tw, big.mul(linv, norm_form(big, m, x))) ^ 1;
            int bitA = big.trace_bit(big.mul(cA, x)) ^ kA;
            int bitB = big.trace_bit(big.mul(cB, x)) ^ kB;
            if (dual.get(x) != (base ^ (bitA & bitB))) return false;
        }
    }
    return true;
}

RtCheck niho_k2_subfield_spectrum_check(const VectorialFunction& F, u32 u1,
                                        u32 u2, const Tower& tw) {
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 szn = u32(1) << n;
    i64 half = i64(1) << (n - 1);
    RtCheck r;
    r.ok = true;
    for (u32 bs = 1; bs < (u32(1) << m); ++bs) {
        u32 b = tw.embed(bs);
        u32 p = big.mul(b, u1), q = u2;
        TruthTable comp = component(F, b);
        for (u32 x = 0; x < szn; ++x) {
            int want = big.trace_bit(big.mul(p, x)) & big.trace_bit(big.mul(q, x));
            if (comp.get(x) != want) {
                r.ok = false;
                return r;
            }
        }
        WalshSpectrum spec = walsh_spectrum(comp, F.domain());
        bool dependent = p == 0 || q == 0 || p == q;
        if (dependent) {
            r.any_dependent = true;
            u32 c = (p == q) ? p : 0; // remaining linear coefficient
            for (u32 w = 0; w < szn; ++w) {
                i64 want = (w == c) ? (i64(1) << n) : 0;
                if (spec.v[w] != want) {
                    r.ok = false;
                    return r;
                }
            }
        } else {
            for (u32 w = 0; w < szn; ++w) {
                i64 want = 0;
                if (w == 0 || w == p || w == q) want = half;
                else if (w == (p ^ q)) want = -half;
                if (spec.v[w] != want) {
                    r.ok = false;
                    return r;
                }
            }
        }
    }
    return r;
}

DiffRowCheck niho_k2_diff_check(const VectorialFunction& F, u32 u1, u32 u2,
                                const Tower& tw, int jobs) {
    if (tw.in_image(u1) || tw.in_image(u2))
        throw std::invalid_argument("coefficients must avoid the subfield copy");
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 szn = u32(1) << n;
    u64 mid = pw2(m - 1), top = pw2(m);

    int nt = resolve_jobs(jobs);
    std::vector<std::set<u64>> s1(nt), s0(nt);
    std::vector<char> okp(nt, 1);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
    {
        int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, 4)
        for (i64 a = 1; a < i64(szn); ++a) {
            std::vector<u32> row = delta_row(F, u32(a));
            bool bit = big.trace_bit(big.mul(u2, u32(a)));
            auto& dst = bit ? s1[tid] : s0[tid];
            for (u32 v : row) {
                dst.insert(v);
                bool allowed = bit ? (v == 0 || v == 2)
                                   : (v == 0 || v == mid || v == top);
                if (!allowed) okp[tid] = 0;
            }
        }
    }
#else
    for (u32 a = 1; a < szn; ++a) {
        std::vector<u32> row = delta_row(F, a);
        bool bit = big.trace_bit(big.mul(u2, a));
        auto& dst = bit ? s1[0] : s0[0];
        for (u32 v : row) {
            dst.insert(v);
            bool allowed =
                bit ? (v == 0 || v == 2) : (v == 0 || v == mid || v == top);
            if (!allowed) okp[0] = 0;
        }
    }
#endif
    DiffRowCheck r;
    r.ok = true;
    for (int t = 0; t < nt; ++t) {
        if (!okp[t]) r.ok = false;
        r.values_bit1.insert(s1[t].begin(), s1[t].end());
        r.values_bit0.insert(s0[t].begin(), s0[t].end());
    }
    return r;
}

// --- product-domain family ----------------------------------------------------

VectorialFunction mm_construct(const MMParams& p,
                               std::shared_ptr<const Field> half) {
    if (!half) throw std::invalid_argument("half field required");
    const Field& f = *half;
    int m = f.degree();
    int k = p.R.k();
    if (int(p.us.size()) != k - 1)
        throw std::invalid_argument("direction count must match switch arity");
    if (k < 2 || k > m) throw std::invalid_argument("need 2 <= k <= m");
    u32 szm = f.size();
    if (p.u11 >= szm) throw std::invalid_argument("coefficient out of range");
    u32 w = f.frobenius(p.u11, -p.j); // phi^-1(u_{1,1})
    for (auto [ui1, ui2] : p.us) {
        if (ui1 >= szm || ui2 >= szm)
            throw std::invalid_argument("coefficient out of range");
        if (ui1 != f.frobenius(ui2, p.j))
            throw std::invalid_argument("first coordinates must be phi of the second");
        if (f.trace_bit(f.mul(w, ui2)))
            throw std::invalid_argument("trace pairing of coefficients must vanish");
    }

    Domain d = Domain::over_product(half);
    std::vector<u32> ft(d.size());
    for (u32 v = 0; v < d.size(); ++v) {
        u32 y = d.hi(v), z = d.lo(v);
        u32 args = 0;
        for (size_t i = 0; i < p.us.size(); ++i)
            args |= u32(f.trace_bit(f.mul(p.us[i].first, y)) ^
                        f.trace_bit(f.mul(p.us[i].second, z)))
                    << i;
        u32 out = d.pack(f.mul(y, f.frobenius(z, p.j)), z);
        if (p.R.eval(args)) out ^= d.pack(f.mul(p.u11, y), 0);
        ft[v] = out;
    }
    return VectorialFunction(d, std::move(ft),
                             "(y*z^(2^" + std::to_string(p.j) + "), z) + (" +
                                 hexstr(p.u11) + "*y, 0)*R(...)");
}

bool mm_dual_check(const VectorialFunction& F, const MMParams& p, u32 a, u32 b) {
    const Domain& d = F.domain();
    const Field& f = d.half_field();
    if (a == 0) throw std::invalid_argument("first index must be nonzero");
    u32 ainv = f.inv(a);

    TruthTable comp = component(F, d.pack(a, b));
    WalshSpectrum spec = walsh_spectrum(comp, d);
    if (!is_bent(spec)) return false;
    TruthTable dual = dual_of_bent(comp, d);

    TruthTable gstar(d.dim()), g(d.dim());
    for (u32 v = 0; v < d.size(); ++v) {
        u32 y = d.hi(v), z = d.lo(v);
        gstar.set(v, f.trace_bit(f.mul(z ^ b, f.frobenius(f.mul(ainv, y), -p.j))));
        g.set(v, f.trace_bit(f.mul(a, f.mul(y, f.frobenius(z, p.j)))) ^
                     f.trace_bit(f.mul(b, z)));
    }
    WalshSpectrum gs = walsh_spectrum(g, d);
    if (!is_bent(gs) || !(dual_of_bent(g, d) == gstar)) return false;

    u32 d1 = d.pack(f.mul(a, p.u11), 0);
    for (u32 v = 0; v < d.size(); ++v) {
        u32 args = 0;
        for (size_t i = 0; i < p.us.size(); ++i) {
            u32 di = d.pack(p.us[i].first, p.us[i].second);
            args |= u32(gstar.get(v ^ di) ^ gstar.get(v)) << i;
        }
        int want =
            gstar.get(v) ^ ((gstar.get(v ^ d1) ^ gstar.get(v)) & p.R.eval(args));
        if (dual.get(v) != want) return false;
    }
    return true;
}

bool mm_completeness_test(const TruthTable& f, const Domain& d) {
    if (!d.is_product())
        throw std::invalid_argument("second-derivative test needs a product domain");
    int m = d.m_half();
    u32 szm = u32(1) << m;
    for (u32 z = 0; z < szm; ++z) {
        int f0 = f.get(d.pack(0, z));
        for (u32 w1 = 0; w1 < szm; ++w1) {
            int f1 = f.get(d.pack(w1, z));
            for (u32 w2 = w1 + 1; w2 < szm; ++w2) {
                if (f.get(d.pack(w1 ^ w2, z)) ^ f1 ^ f.get(d.pack(w2, z)) ^ f0)
                    return false;
            }
        }
    }
    return true;
}

// --- binomial family -----------------------------------------------------------

VectorialFunction binomial_pair(int i, std::shared_ptr<const Tower> tw) {
    if (!tw) throw std::invalid_argument("tower required");
    int m = tw->m(), n = tw->n();
    if (i < 0 || i >= m) throw std::invalid_argument("exponent index out of range");
    const Field& big = tw->big();
    std::vector<u32> ft(u64(1) << n);
    for (u32 x = 0; x < ft.size(); ++x)
        ft[x] = norm_form(big, m, x) ^ big.mul(big.frobenius(x, i), x);
    return VectorialFunction(Domain::over_field(tw), std::move(ft),
                             "x^(2^" + std::to_string(m) + "+1) + x^(2^" +
                                 std::to_string(i) + "+1)");
}

std::vector<u32> linearized_roots(u32 a, int i, const Tower& tw) {
    if (a == 0) throw std::invalid_argument("coefficient must be nonzero");
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 c1 = big.frobenius(a, i);
    u32 c2 = big.frobenius(a ^ big.frobenius(a, m), i);
    std::vector<u32> cols(n);
    for (int t = 0; t < n; ++t) {
        u32 y = u32(1) << t;
        cols[t] = big.mul(c1, big.frobenius(y, 2 * i)) ^
                  big.mul(c2, big.frobenius(y, m + i)) ^ big.mul(a, y);
    }
    return span_of(f2_kernel_basis(cols));
}

std::optional<u32> binomial_nonbent_witness(int i, const Tower& tw) {
    const Field& big = tw.big();
    int m = tw.m(), n = tw.n();
    u32 szn = u32(1) << n;
    for (u32 a = 1; a < szn; ++a) {
        if (tw.in_image(a)) continue;
        u32 c1 = big.frobenius(a, i);
        u32 c2 = big.frobenius(a ^ big.frobenius(a, m), i);
        std::vector<u32> cols(n);
        for (int t = 0; t < n; ++t) {
            u32 y = u32(1) << t;
            cols[t] = big.mul(c1, big.frobenius(y, 2 * i)) ^
                      big.mul(c2, big.frobenius(y, m + i)) ^ big.mul(a, y);
        }
        if (f2_rank(cols) < n) return a;
    }
    return std::nullopt;
}

std::optional<u32> binomial_explicit_witness(int i, const Tower& tw) {
    int m = tw.m(), n = tw.n();
    if (i <= 0 || i >= m) return std::nullopt;
    if (val2(u64(i)) != val2(u64(m))) return std::nullopt;
    const Field& big = tw.big();
    int d = int(std::gcd(m + i, 2 * m)); // even when the valuations agree
    u64 ord = (u64(1) << (d / 2)) + 1;
    u32 xi = big.exp_g((pw2(n) - 1) / ord);
    return big.inv(1u ^ xi);
}

NSetCount count_N_set(int m, int d) {
    if (m < 2 || m > 20) throw std::invalid_argument("degree out of range");
    if (d < 1 || d >= m || m % d != 0)
        throw std::invalid_argument("need a proper divisor of the degree");
    auto f = make_field(m);
    i64 u = i64(pw2(d)) - 1;
    NSetCount r;
    for (u32 y = 1; y < f->size(); ++y)
        if (f->trace(f->pow(y, u), d) == 0) ++r.count;
    r.t = int(std::gcd(pw2(d) - 1, u64(m / d)));
    r.closed_form_applies = r.t == 1;
    r.closed_form = pw2(m - d) - 1;
    return r;
}

} // namespace bentcomp
