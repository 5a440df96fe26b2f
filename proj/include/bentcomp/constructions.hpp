#pragma once
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bentcomp/analysis.hpp"
#include "bentcomp/rng.hpp"

namespace bentcomp {

// ---------------------------------------------------------------------------
// Multilinear switch polynomial R(X_2, ..., X_k) over F_2, stored by its
// value table on the 2^(k-1) points of F_2^(k-1) (bit i of the argument is
// X_{i+2}).  Multilinearity is automatic for a function given by its values.
// ---------------------------------------------------------------------------
class ReducedPolynomial {
public:
    ReducedPolynomial(int k, TruthTable values);

    static ReducedPolynomial zero(int k);
    static ReducedPolynomial single_variable(int k, int which); // X_which, 2 <= which <= k
    static ReducedPolynomial product_of_all(int k);             // X_2 X_3 ... X_k
    static ReducedPolynomial random(int k, Rng& rng);

    int k() const { return k_; }
    int arity() const { return k_ - 1; }
    const TruthTable& values() const { return t_; }
    int eval(u32 argbits) const { return t_.get(argbits); }

private:
    int k_;
    TruthTable t_;
};

// ---------------------------------------------------------------------------
// Trace-composition family  F(x) = x^(2^e) * h(Tr_{2^n/2^m}(x))  on F_{2^n},
// n = 2m, together with its half-size companion  H(x) = x^(2^e) * h(x) on
// F_{2^m}.  h is given as a permutation table of F_{2^m}.
// ---------------------------------------------------------------------------
struct TracePermPair {
    VectorialFunction F; // over F_{2^n}
    VectorialFunction H; // over F_{2^m}
    int e = 0;
    std::shared_ptr<const Tower> tower;
};

TracePermPair trace_perm(int e, const std::vector<u32>& h,
                         std::shared_ptr<const Tower> tw);

// Exact two-sided check of the spectrum factorization: for every
// a in F_{2^m}^* and every w in F_{2^n},
//   W_{F_a}(w) = 2^m * W_{H_a}(w')  when w is the embedding of w', and
//   W_{F_a}(w) = 0                  when w lies outside the subfield copy;
// and of the induced nonlinearity identity
//   nl(F) = 2^(n-1) - 2^(m-1) * max_{a != 0} max_w |W_{H_a}(w)|
// against the exhaustive nonlinearity of F.
bool verify_walsh_factorization(const TracePermPair& p, int jobs = 0);

// ---------------------------------------------------------------------------
// Monomial h: stats of the single Boolean function  Tr_{2^m/2}(x^u)  that
// controls the whole family F = x^(2^e) x^(u-2^e) composed with the trace.
// ---------------------------------------------------------------------------
struct MonomialTraceStats {
    int m = 0;
    int e = 0;
    u64 u = 0;
    u32 max_abs_walsh = 0;            // L = max_w |W(w)| of Tr(x^u)
    u64 family_nonlinearity = 0;      // 2^(n-1) - 2^(m-1) * L,  n = 2m
    u64 lower_bound = 0;              // 2^(floor(n/4) + 1)
    bool bound_holds = false;         // L >= lower_bound
    std::map<int, u64> value_counts;  // signed Walsh value -> multiplicity
};

// Throws if u collapses to a linear exponent (u = 2^j mod 2^m - 1) or if
// gcd(u, 2^m-1) != 1 or gcd(u - 2^e, 2^m-1) != 1 (h would not be a
// permutation).
MonomialTraceStats monomial_trace_stats(u64 u, int m, int e);

// u = s(2^t - 1) + 2^(e+1) on F_{2^m}, m = 2t.  Validates 0 < s < 2^t - 1
// and gcd(2^e - s, 2^t + 1) = 1; throws otherwise.  Spectrum consequence
// carried alongside: every Walsh value of Tr(x^u) is divisible by 2^t and
// the maximum is at least 2^(t+1).
struct NihoExponent {
    u64 u = 0;
    int t = 0, s = 0, e = 0;
    u32 divisor = 0;      // 2^t
    u32 min_max_abs = 0;  // 2^(t+1)
};
NihoExponent niho_exponent(int t, int s, int e);

// Number of roots in F_{2^m} of (x+1)^u + x^u + 1 (0 and 1 always count).
u64 count_niho_roots(u64 u, int m);

// Three-valued spectra {0, +-A}: ties A to the root count by A^2 = 2^m * R
// and to the family nonlinearity by nl = 2^(n-1) - 2^(m-1) * A.
struct ThreeValuedReport {
    bool three_valued = false; // Walsh values of Tr(x^u) lie in {0, +-A}
    u32 A = 0;
    u64 roots = 0;             // R
    bool magnitude_matches = false; // A^2 == 2^m * R and A is a power of two
    u64 family_nonlinearity = 0;    // via A
};
ThreeValuedReport three_valued_report(u64 u, int m);

// ---------------------------------------------------------------------------
// F_2-linear h: every component of H is quadratic, so the spectra are ruled
// by symplectic ranks.
// ---------------------------------------------------------------------------
struct LinearRankReport {
    int m = 0, e = 0;
    std::map<int, u64> rank_counts;  // rank -> number of components a != 0
    int r = 0;                       // min over the (always even) ranks
    u64 nl_formula = 0;              // 2^(n-1) - 2^(n - r/2 - 1)
    u64 nl_exhaustive = 0;           // from the full component scan of F
    bool formula_matches = false;
    u64 plateau_bound = 0;           // 2^(n-1) - 2^(floor(3n/4))
    bool attains_bound = false;      // nl == plateau_bound
    bool rank_condition = false;     // r == 2 * (ceil(m/2) - 1)
};

// h must be F_2-linear and bijective on F_{2^m}; throws otherwise.
LinearRankReport linear_h_analysis(int e, const std::vector<u32>& h,
                                   std::shared_ptr<const Tower> tw, int jobs = 0);

// ---------------------------------------------------------------------------
// Dual-derivative linearity (the perturbation enabler): checks
//   f*(x + sum w_i u_i) == f*(x) + sum w_i D_{u_i} f*(x)
// for all x and all weight vectors w in F_2^k.  The u_i must be linearly
// independent over F_2 (throws otherwise); f* is the dual of a bent function
// on the same 2^N points.
// ---------------------------------------------------------------------------
bool condition_a_check(const TruthTable& fstar, const std::vector<u32>& us);

// A basis {b_1, ..., b_m} of F_{2^m} with Tr(b_i b_j) = [i == j] (its own
// dual basis under the trace form).  One exists for every m; found by
// backtracking, returned in the order discovered.
std::vector<u32> self_dual_basis(const Field& f);

// ---------------------------------------------------------------------------
// Perturbed norm-form family on F_{2^n}, n = 2m:
//   F(x) = x^(2^m + 1) + u_1 x R(Tr_{2^n/2}(u_2 x), ..., Tr_{2^n/2}(u_k x))
// with u_1, ..., u_k in F_{2^m} (given as subfield elements), subject to
// 3 <= k <= m and Tr_{2^m/2}(u_1 u_j) = 0 for j >= 2.
// ---------------------------------------------------------------------------
VectorialFunction niho_general(u32 u1, const std::vector<u32>& us,
                               const ReducedPolynomial& R,
                               std::shared_ptr<const Tower> tw);

// Pointwise dual identity for every b outside the subfield copy:
//   F_b* = G_b* + D_{b u_1} G_b* * R(D_{u_2} G_b*, ..., D_{u_k} G_b*)
// where G_b*(x) = Tr_{2^m/2}(g^-1 x^(2^m+1)) + 1 and g = b + b^(2^m).
// Also requires every such component to be bent in the first place.
bool niho_general_dual_check(const VectorialFunction& F, u32 u1,
                             const std::vector<u32>& us,
                             const ReducedPolynomial& R, const Tower& tw);

// The two derivative formulas of the dual of the norm form, for one b
// outside the subfield copy: D_{b u_1} G_b* and D_{u_i} G_b* equal the
// displayed affine functions (a big-field trace form plus a constant bit).
bool niho_dual_derivative_check(const Tower& tw, u32 u1,
                                const std::vector<u32>& us, u32 b);

// ---------------------------------------------------------------------------
// Two-term specialization with big-field coefficients:
//   F(x) = x^(2^m+1) + u_1 x Tr_{2^n/2}(u_2 x),
// requiring u_1 u_2^(2^m) to lie in the subfield copy with
// Tr_{2^m/2}(u_1 u_2^(2^m)) = 0.
// ---------------------------------------------------------------------------
VectorialFunction niho_k2(u32 u1, u32 u2, std::shared_ptr<const Tower> tw);

// All (u_1, u_2) pairs passing the preconditions, ascending. With
// outside_subfield_only, both coordinates must avoid the subfield copy.
std::vector<std::pair<u32, u32>> niho_k2_parameters(const Tower& tw,
                                                    bool outside_subfield_only = false);

// Dual identity for components outside the subfield copy, with
// l = b + b^(2^m):
//   F_b*(x) = Tr_{2^m/2}(l^-1 x^(2^m+1)) + 1
//           + (Tr_{2^n/2}(l^-1 (b u_1)^(2^m) x) + Tr_{2^m/2}(l^-1 (b u_1)^(2^m+1)))
//           * (Tr_{2^n/2}(l^-1 u_2^(2^m) x)     + Tr_{2^m/2}(l^-1 u_2^(2^m+1)))
bool niho_k2_dual_check(const VectorialFunction& F, u32 u1, u32 u2,
                        const Tower& tw);

// Subfield components collapse to the product of two linear forms
// Tr(b u_1 x) * Tr(u_2 x); their spectra form a trichotomy:
//   independent b u_1, u_2:  W = 2^(n-1) on {0, b u_1, u_2},
//                            W = -2^(n-1) at b u_1 + u_2, and 0 elsewhere;
//   dependent:               W = 2^n at the single linear coefficient.
struct RtCheck {
    bool ok = false;             // every subfield component matched
    bool any_dependent = false;  // some b hit the one-point case
};
RtCheck niho_k2_subfield_spectrum_check(const VectorialFunction& F, u32 u1,
                                        u32 u2, const Tower& tw);

// Differential rows split by the bit Tr_{2^n/2}(u_2 a): value set of row a
// is inside {0, 2} when the bit is 1 and inside {0, 2^(m-1), 2^m} when it
// is 0.  Requires u_1, u_2 outside the subfield copy (throws otherwise).
struct DiffRowCheck {
    bool ok = false;
    std::set<u64> values_bit1;  // union of row values over a with bit 1
    std::set<u64> values_bit0;  // union over a with bit 0
};
DiffRowCheck niho_k2_diff_check(const VectorialFunction& F, u32 u1, u32 u2,
                                const Tower& tw, int jobs = 0);

// ---------------------------------------------------------------------------
// Product-domain family on F_{2^m} x F_{2^m} built from the two-sided
// multiplication map (y, z) -> (y z^(2^j), z):
//   F(y,z) = (y phi(z), z) + (u_{1,1} y, 0) R(Tr(u_{2,1}y + u_{2,2}z), ...)
// with phi(z) = z^(2^j), u_{i,1} = phi(u_{i,2}) and
// Tr_{2^m/2}(phi^-1(u_{1,1}) u_{i,2}) = 0 for 2 <= i <= k, 2 <= k <= m.
// ---------------------------------------------------------------------------
struct MMParams {
    int j = 1;   // exponent of the automorphism phi(z) = z^(2^j)
    u32 u11 = 0; // first perturbation direction (u_{1,1}, 0)
    std::vector<std::pair<u32, u32>> us; // (u_{i,1}, u_{i,2}), i = 2..k
    ReducedPolynomial R;
};

VectorialFunction mm_construct(const MMParams& p,
                               std::shared_ptr<const Field> half);

// Dual identity of the product-domain family at one component (a, b),
// a != 0:  F*_{a,b} = G*_{a,b} + D_{(a u_{1,1}, 0)} G*_{a,b}
//                     * R(D_{u_2} G*_{a,b}, ..., D_{u_k} G*_{a,b})
// with G*_{a,b}(y,z) = Tr((z + b) phi^-1(a^-1 y)).  Also checks that
// G*_{a,b} really is the dual of G_{a,b}(y,z) = Tr(a y phi(z) + b z).
bool mm_dual_check(const VectorialFunction& F, const MMParams& p,
                   u32 a, u32 b);

// Second-derivative test along the first factor: true iff
//   f(w1+w2, z) + f(w1, z) + f(w2, z) + f(0, z) == 0
// for all w1, w2, z.  Functions whose first-factor slices are affine in y
// (in particular every Tr(a y phi(z) + b g(z))) pass; returning false
// certifies the function left that class.
bool mm_completeness_test(const TruthTable& f, const Domain& d);

// ---------------------------------------------------------------------------
// Binomial family  F(x) = x^(2^m+1) + x^(2^i+1)  on F_{2^n}, n = 2m.
// Components F_a are quadratic; F_a is bent exactly when the linearized
// polynomial
//   L_a(y) = a^(2^i) y^(2^(2i)) + (a + a^(2^m))^(2^i) y^(2^(m+i)) + a y
// has no nonzero root.  Its root set is an F_{2^d}-space, d = gcd(m+i, 2m).
// ---------------------------------------------------------------------------
VectorialFunction binomial_pair(int i, std::shared_ptr<const Tower> tw);

// All roots of L_a in F_{2^n} (kernel of the F_2-linear evaluation map,
// computed by rank-nullity on the n x n bit matrix), ascending; contains 0.
// Throws on a = 0.
std::vector<u32> linearized_roots(u32 a, int i, const Tower& tw);

// Smallest a outside the subfield copy whose L_a has a nonzero root
// (exhaustive scan); nullopt when every such kernel is trivial (i = 0).
std::optional<u32> binomial_nonbent_witness(int i, const Tower& tw);

// Closed-form witness a = 1/(1 + xi) with xi a nontrivial root of
// xi^(2^(d/2)+1) = 1, available whenever v_2(i) = v_2(m) (d is then even);
// its L_a vanishes on all of F_{2^d}.  nullopt when v_2(i) != v_2(m).
std::optional<u32> binomial_explicit_witness(int i, const Tower& tw);

// |{ y in F_{2^m}^* : Tr_{2^m/2^d}(y^(2^d-1)) = 0 }| by exhaustive count.
// Requires d | m, d < m.  When t = gcd(2^d-1, m/d) = 1 the count has the
// closed form 2^(m-d) - 1; it is nonzero in every case.
struct NSetCount {
    u64 count = 0;
    int t = 0;
    bool closed_form_applies = false; // t == 1
    u64 closed_form = 0;              // 2^(m-d) - 1
};
NSetCount count_N_set(int m, int d);

} // namespace bentcomp
