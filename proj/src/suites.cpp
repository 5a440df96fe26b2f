#include "bentcomp/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "bentcomp/constructions.hpp"
#include "bentcomp/rng.hpp"

namespace bentcomp {

namespace {

u64 pw2(int e) { return u64{1} << e; }
int val2(u64 x) { return x ? __builtin_ctzll(x) : 64; }

std::string hexstr(u32 v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
}

SuiteResult fresh(const char* id) {
    SuiteResult r;
    r.id = id;
    return r;
}

void add(SuiteResult& r, int m, std::string name, bool pass, std::string note = "") {
    if (!pass && r.counterexample.empty()) {
        nlohmann::json j{{"suite", r.id}, {"check", name}, {"m", m}, {"note", note}};
        r.counterexample = j.dump();
    }
    r.pass = r.pass && pass;
    r.checks.push_back({std::move(name), pass, std::move(note)});
}

void observe(SuiteResult& r, std::string name, std::string note) {
    r.checks.push_back({std::move(name), true, std::move(note)});
}

void require_m(const SuiteParams& p, int lo, int hi, const char* id) {
    if (p.m < lo || p.m > hi)
        throw std::invalid_argument(std::string("suite ") + id + " supports m in [" +
                                    std::to_string(lo) + "," + std::to_string(hi) +
                                    "], got " + std::to_string(p.m));
}

std::vector<u32> identity_table(int m) {
    std::vector<u32> h(size_t{1} << m);
    std::iota(h.begin(), h.end(), 0u);
    return h;
}

int mask_rank(std::vector<u64> v) { // F_2 rank of bit masks
    int rank = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (v[j]) v[i] = std::min(v[i], v[i] ^ v[j]);
        if (v[i]) ++rank;
    }
    return rank;
}

// images of the basis vectors of a uniformly random F_2-linear bijection
std::vector<u32> random_linear_bijection(int m, Rng& rng) {
    while (true) {
        std::vector<u64> img(m);
        for (auto& x : img) x = 1 + rng.below(u32(pw2(m) - 1));
        if (mask_rank(img) != m) continue;
        std::vector<u32> h(size_t{1} << m);
        for (u32 x = 0; x < h.size(); ++x) {
            u32 y = 0;
            for (int j = 0; j < m; ++j)
                if (x >> j & 1) y ^= u32(img[j]);
            h[x] = y;
        }
        return h;
    }
}

// first valid trace exponent for the monomial family, if any
bool stats_for(u64 u, int m, MonomialTraceStats& out) {
    for (int e = 0; e < m; ++e) {
        try {
            out = monomial_trace_stats(u, m, e);
            return true;
        } catch (const std::exception&) {
        }
    }
    return false;
}

size_t stride_for(size_t size, size_t target) { return size / target + 1; }

// ---------------------------------------------------------------------------
// wt: spectrum factorization of x^(2^e) h(Tr(x)) through the half field
// ---------------------------------------------------------------------------
SuiteResult suite_wt(const SuiteParams& p) {
    SuiteResult r = fresh("wt");
    require_m(p, 2, 5, "wt");
    auto tw = make_tower(p.m);
    Rng rng(p.seed);

    int cases = 0;
    bool all_ok = true;
    std::string first_fail;
    for (int trial = 0; trial <= p.trials; ++trial) {
        auto h = trial == 0 ? identity_table(p.m) : rng.permutation(u32(pw2(p.m)));
        for (int e = 0; e < 2 * p.m; ++e) {
            if (p.e >= 0 && e != p.e) continue;
            ++cases;
            if (!verify_walsh_factorization(trace_perm(e, h, tw), p.jobs) && all_ok) {
                all_ok = false;
                first_fail = "trial " + std::to_string(trial) + ", e=" + std::to_string(e);
            }
        }
    }
    add(r, p.m,
        "subfield components factor as 2^m * (half-field spectrum) and vanish "
        "off the subfield copy; nonlinearity identity matches the exhaustive scan",
        all_ok,
        all_ok ? std::to_string(cases) + " (h, e) cases: identity plus " +
                     std::to_string(p.trials) + " random permutations, all exponents"
               : "failed at " + first_fail);
    return r;
}

// ---------------------------------------------------------------------------
// conj-niho: spectrum-maximum floor bound, plus the structured-exponent
// divisibility on half fields of even degree
// ---------------------------------------------------------------------------
SuiteResult suite_conj_niho(const SuiteParams& p) {
    SuiteResult r = fresh("conj-niho");
    require_m(p, 2, 8, "conj-niho");
    const int m = p.m;

    u32 min_l = ~0u;
    u64 min_u = 0, admissible = 0;
    bool bound_ok = true;
    std::string fail_note;
    for (u64 u = 2; u < pw2(m) - 1; ++u) {
        MonomialTraceStats st;
        if (!stats_for(u, m, st)) continue;
        ++admissible;
        if (st.max_abs_walsh < min_l) {
            min_l = st.max_abs_walsh;
            min_u = u;
        }
        if (!st.bound_holds && bound_ok) {
            bound_ok = false;
            fail_note = "u=" + std::to_string(u) + " has L=" + std::to_string(st.max_abs_walsh);
        }
    }
    if (admissible == 0) {
        observe(r, "spectrum maximum >= 2^(floor(m/2)+1) for every admissible exponent",
                "no admissible exponents at m=" + std::to_string(m) + "; nothing to assert");
    } else {
        add(r, m, "spectrum maximum >= 2^(floor(m/2)+1) for every admissible exponent",
            bound_ok,
            bound_ok ? std::to_string(admissible) + " admissible exponents; minimum L=" +
                           std::to_string(min_l) + " at u=" + std::to_string(min_u) +
                           " (bound " + std::to_string(pw2(m / 2 + 1)) + ")"
                     : fail_note);
    }

    if (m % 2 != 0) {
        observe(r, "structured-exponent divisibility",
                "needs even m (m = 2t); skipped at m=" + std::to_string(m));
        return r;
    }
    const int t = m / 2;
    auto f = make_field(m);
    Domain dom = Domain::over_field(f);
    int tested = 0;
    bool div_ok = true, max_ok = true;
    std::string div_fail, max_fail;
    for (int s = 1; s < int(pw2(t)) - 1; ++s)
        for (int e = 0; e < 2 * t; ++e) {
            NihoExponent ne;
            try {
                ne = niho_exponent(t, s, e);
            } catch (const std::exception&) {
                continue;
            }
            ++tested;
            TruthTable tt(m);
            for (u32 x = 0; x < f->size(); ++x)
                tt.set(x, f->trace_bit(f->pow(x, i64(ne.u % f->order()))));
            auto ws = walsh_spectrum(tt, dom);
            bool div = true;
            for (int v : ws.v) div = div && v % int(ne.divisor) == 0;
            if (!div && div_ok) {
                div_ok = false;
                div_fail = "s=" + std::to_string(s) + ", e=" + std::to_string(e);
            }
            if (ws.max_abs() < int(ne.min_max_abs) && max_ok) {
                max_ok = false;
                max_fail = "s=" + std::to_string(s) + ", e=" + std::to_string(e);
            }
        }
    add(r, m, "every Walsh value of Tr(x^u) is divisible by 2^t", div_ok,
        div_ok ? std::to_string(tested) + " structured exponents at t=" + std::to_string(t)
               : div_fail);
    add(r, m, "the spectrum maximum is at least 2^(t+1)", max_ok,
        max_ok ? std::to_string(tested) + " structured exponents" : max_fail);
    return r;
}

// ---------------------------------------------------------------------------
// three-valued: A^2 = 2^m * R for every exponent with spectrum {0, +-A}
// ---------------------------------------------------------------------------
SuiteResult suite_three_valued(const SuiteParams& p) {
    SuiteResult r = fresh("three-valued");
    require_m(p, 2, 8, "three-valued");
    const int m = p.m;
    const u64 q1 = pw2(m) - 1;
    u64 three = 0, non_perm = 0;
    bool all_ok = true;
    std::string fail;
    for (u64 u = 1; u < q1; ++u) {
        auto rep = three_valued_report(u, m);
        if (!rep.three_valued) continue;
        if (std::gcd(u, q1) != 1) { // x^u is not a permutation: identity not claimed
            ++non_perm;
            continue;
        }
        ++three;
        if (!rep.magnitude_matches && all_ok) {
            all_ok = false;
            fail = "u=" + std::to_string(u) + ": A=" + std::to_string(rep.A) +
                   ", roots=" + std::to_string(rep.roots);
        }
    }
    add(r, m,
        "A is a power of two with A^2 = 2^m * |roots of (x+1)^u + x^u + 1| "
        "whenever x^u permutes the field and Tr(x^u) has spectrum {0, +-A}",
        all_ok,
        all_ok ? std::to_string(three) + " permutation exponents are three-valued"
               : fail);
    if (non_perm > 0)
        observe(r, "three-valued spectra outside the permutation hypothesis",
                std::to_string(non_perm) +
                    " non-permutation exponents are three-valued; the root-count "
                    "identity is not asserted for them");
    return r;
}

// ---------------------------------------------------------------------------
// table1: the three-valued monomial rows at their admissibility conditions
// ---------------------------------------------------------------------------
struct T1Case {
    std::string row;
    int e = -1; // exponent parameter of the u-formula, where the row has one
    u64 u = 0;
    u64 A = 0;
};

const std::vector<std::string>& table1_rows() {
    static const std::vector<std::string> rows{"gold", "kasami", "row3",
                                               "row4", "row5", "row6"};
    return rows;
}

// Admissible cases of one row at this m (constraints only; the family-
// exponent search happens at check time).  Empty when none are admissible;
// reason explains why when the row has a blanket constraint failure.
std::vector<T1Case> row_cases(const std::string& row, int m, int e_filter,
                              std::string& reason) {
    std::vector<T1Case> out;
    auto want_e = [&](int e) { return e_filter < 0 || e == e_filter; };
    if (row == "gold") {
        for (int e = 1; e < m; ++e) {
            if (!want_e(e) || val2(e) < val2(m)) continue;
            int d = std::gcd(m, e);
            out.push_back({row, e, pw2(e) + 1, pw2((m + d) / 2)});
        }
        if (out.empty()) reason = "needs e in [1,m) with v2(e) >= v2(m)";
    } else if (row == "kasami") {
        for (int e = 1; e < m; ++e) {
            if (!want_e(e) || val2(e) <= val2(m) || std::gcd(m, e) != 1) continue;
            out.push_back({row, e, pw2(2 * e) - pw2(e) + 1, pw2((m + 1) / 2)});
        }
        if (out.empty()) reason = "needs e in [1,m) with v2(e) > v2(m) and gcd(m,e) = 1";
    } else if (row == "row3" || row == "row4") {
        if (e_filter >= 0) {
            reason = "row takes no exponent parameter";
        } else if (m % 4 != 2) {
            reason = "needs v2(m) = 1";
        } else if (val2(std::gcd(u64(m), u64((m + 2) / 4))) != 1) {
            reason = "needs v2(gcd(m, (m+2)/4)) = 1";
        } else {
            int q = (m + 2) / 4;
            u64 u = row == "row3" ? pw2(m / 2) + pw2(q) + 1 : pw2(q) + 3;
            out.push_back({row, -1, u, pw2(m / 2 + 1)});
        }
    } else if (row == "row5") {
        if (e_filter >= 0)
            reason = "row takes no exponent parameter";
        else if (m % 4 != 1)
            reason = "needs m congruent to 1 mod 4";
        else
            out.push_back({row, -1, pw2((m - 1) / 4) + 3, pw2((m + 1) / 2)});
    } else if (row == "row6") {
        if (m % 2 == 0) {
            reason = "needs odd m";
        } else {
            for (int e = 1; e < m; ++e)
                if (want_e(e) && (4 * e + 1) % m == 0)
                    out.push_back({row, e, pw2(2 * e) + pw2(e) - 1, pw2((m + 1) / 2)});
            if (out.empty()) reason = "needs e in [1,m) with m | 4e+1";
        }
    } else {
        throw std::invalid_argument("unknown table row: " + row);
    }
    return out;
}

SuiteResult suite_table1(const SuiteParams& p) {
    SuiteResult r = fresh("table1");
    require_m(p, 2, 8, "table1");
    const bool explicit_row = !p.row.empty();
    if (explicit_row &&
        std::find(table1_rows().begin(), table1_rows().end(), p.row) ==
            table1_rows().end())
        throw std::invalid_argument("unknown table row: " + p.row);
    if (p.e >= 0 && (p.row == "row3" || p.row == "row4" || p.row == "row5"))
        throw std::invalid_argument("row " + p.row + " takes no exponent parameter");

    int rows_checked = 0;
    for (const auto& row : table1_rows()) {
        if (explicit_row && row != p.row) continue;
        std::string reason;
        auto cases = row_cases(row, p.m, p.e, reason);
        if (cases.empty()) {
            if (reason.empty()) reason = "constraints exclude every requested exponent";
            if (explicit_row)
                throw std::invalid_argument("table1 row " + row + " at m=" +
                                            std::to_string(p.m) + ": " + reason);
            observe(r, "row " + row, "inadmissible at m=" + std::to_string(p.m) + ": " + reason);
            continue;
        }
        for (const auto& c : cases) {
            MonomialTraceStats st;
            if (!stats_for(c.u, p.m, st)) {
                std::string note = "u=" + std::to_string(c.u) +
                                   ": no exponent yields a valid family (the inner "
                                   "map degenerates or is not a permutation)";
                if (explicit_row)
                    throw std::invalid_argument("table1 row " + row + " at m=" +
                                                std::to_string(p.m) + ": " + note);
                observe(r, "row " + row, note);
                continue;
            }
            ++rows_checked;
            bool values_ok = true;
            for (const auto& [v, cnt] : st.value_counts)
                values_ok = values_ok && (v == 0 || u64(std::abs(v)) == c.A);
            const u64 nl_expect = pw2(2 * p.m - 1) - pw2(p.m - 1) * c.A;
            std::string label = "row " + row +
                                (c.e >= 0 ? " (e=" + std::to_string(c.e) + ")" : "") +
                                ": spectrum values in {0, +-" + std::to_string(c.A) +
                                "} and nonlinearity " + std::to_string(nl_expect);
            add(r, p.m, label, values_ok && st.family_nonlinearity == nl_expect,
                "u=" + std::to_string(c.u) + ", L=" + std::to_string(st.max_abs_walsh) +
                    ", nonlinearity=" + std::to_string(st.family_nonlinearity));
        }
    }
    if (rows_checked == 0 && r.checks.empty())
        observe(r, "table rows", "no admissible rows at m=" + std::to_string(p.m));
    return r;
}

// ---------------------------------------------------------------------------
// linear-h: rank-driven nonlinearity for linear bijective h
// ---------------------------------------------------------------------------
SuiteResult suite_linear_h(const SuiteParams& p) {
    SuiteResult r = fresh("linear-h");
    require_m(p, 2, 5, "linear-h");
    auto tw = make_tower(p.m);
    Rng rng(p.seed);

    int cases = 0;
    bool formula_ok = true, criterion_ok = true;
    std::string f_fail, c_fail;
    for (int trial = 0; trial < p.trials; ++trial) {
        auto h = random_linear_bijection(p.m, rng);
        for (int e = 0; e < p.m; ++e) {
            if (p.e >= 0 && e != p.e) continue;
            ++cases;
            auto rep = linear_h_analysis(e, h, tw, p.jobs);
            if (!rep.formula_matches && formula_ok) {
                formula_ok = false;
                f_fail = "trial " + std::to_string(trial) + ", e=" + std::to_string(e);
            }
            if (rep.attains_bound != rep.rank_condition && criterion_ok) {
                criterion_ok = false;
                c_fail = "trial " + std::to_string(trial) + ", e=" + std::to_string(e) +
                         ": r=" + std::to_string(rep.r);
            }
        }
    }
    add(r, p.m,
        "nonlinearity equals 2^(n-1) - 2^(n - r/2 - 1) with r the minimal "
        "component rank",
        formula_ok,
        formula_ok ? std::to_string(cases) + " random linear bijections x exponents"
                   : f_fail);
    add(r, p.m,
        "the plateau bound 2^(n-1) - 2^(3n/4) is attained exactly when "
        "r = 2(ceil(m/2) - 1)",
        criterion_ok, criterion_ok ? std::to_string(cases) + " cases" : c_fail);
    return r;
}

// ---------------------------------------------------------------------------
// cor2: x^(2^e) Tr(x) attains the plateau bound iff gcd(e, m) = 1
// ---------------------------------------------------------------------------
SuiteResult suite_cor2(const SuiteParams& p) {
    SuiteResult r = fresh("cor2");
    require_m(p, 2, 6, "cor2");
    auto tw = make_tower(p.m);
    auto id = identity_table(p.m);

    bool formula_ok = true, fwd_ok = true, crit_ok = true;
    std::string f_fail, fwd_fail, c_fail;
    std::vector<std::string> converse_exceptions;
    bool converse_ok = true;
    std::string conv_fail;
    const bool assert_converse = p.m >= 3 && p.m <= 5;

    for (int e = 0; e < p.m; ++e) {
        if (p.e >= 0 && e != p.e) continue;
        auto rep = linear_h_analysis(e, id, tw, p.jobs);
        const bool coprime = std::gcd(e, p.m) == 1;
        if (!rep.formula_matches && formula_ok) {
            formula_ok = false;
            f_fail = "e=" + std::to_string(e);
        }
        if (rep.attains_bound != rep.rank_condition && crit_ok) {
            crit_ok = false;
            c_fail = "e=" + std::to_string(e);
        }
        if (coprime && !rep.attains_bound && fwd_ok) {
            fwd_ok = false;
            fwd_fail = "e=" + std::to_string(e) + ": nonlinearity " +
                       std::to_string(rep.nl_exhaustive) + " < bound " +
                       std::to_string(rep.plateau_bound);
        }
        if (!coprime && rep.attains_bound) {
            std::string what = "e=" + std::to_string(e) + " (gcd " +
                               std::to_string(std::gcd(e, p.m)) + ") attains the bound" +
                               (p.m == 2 ? " because the bound degenerates to 0 at m=2"
                                         : "; minimal rank " + std::to_string(rep.r) +
                                               " still satisfies the rank criterion");
            if (assert_converse && converse_ok) {
                converse_ok = false;
                conv_fail = what;
            } else {
                converse_exceptions.push_back(what);
            }
        }
    }
    add(r, p.m, "nonlinearity matches the rank formula for every exponent", formula_ok,
        formula_ok ? "" : f_fail);
    add(r, p.m, "bound attained whenever gcd(e, m) = 1", fwd_ok, fwd_ok ? "" : fwd_fail);
    add(r, p.m, "bound attainment coincides with the rank criterion", crit_ok,
        crit_ok ? "" : c_fail);
    if (assert_converse) {
        add(r, p.m, "bound attained only when gcd(e, m) = 1", converse_ok,
            converse_ok ? "" : conv_fail);
    } else if (!converse_exceptions.empty()) {
        std::string joined;
        for (const auto& s : converse_exceptions)
            joined += (joined.empty() ? "" : "; ") + s;
        observe(r, "gcd converse does not hold at this m", joined);
    }
    return r;
}

// ---------------------------------------------------------------------------
// condA: dual-derivative linearity along the perturbation directions
// ---------------------------------------------------------------------------
SuiteResult suite_condA(const SuiteParams& p) {
    SuiteResult r = fresh("condA");
    require_m(p, 2, 8, "condA");
    if (p.m < 3) {
        observe(r, "dual-derivative linearity",
                "needs 3 independent directions and a nonquadratic falsification "
                "target (every permutation of a 4-element field is affine); "
                "skipped at m=2");
        return r;
    }
    auto tw = make_tower(p.m);
    auto basis = self_dual_basis(tw->small());

    auto G = niho_k2(0, 0, tw);
    u32 b = 0;
    for (u32 c = 1; c < tw->big().size(); ++c)
        if (!tw->in_image(c)) {
            b = c;
            break;
        }
    auto fstar = dual_of_bent(component(G, b), G.domain());
    std::vector<u32> dirs{tw->big().mul(b, tw->embed(basis[0]))};
    for (size_t i = 1; i < basis.size() && dirs.size() < 3; ++i)
        dirs.push_back(tw->embed(basis[i]));
    add(r, p.m,
        "the dual of the pure power-map component is linear along the "
        "designated perturbation directions",
        condition_a_check(fstar, dirs),
        "component b=" + hexstr(b) + ", " + std::to_string(dirs.size()) + " directions");

    // Falsifiability on a generic bent function: a product-domain bilinear
    // form through a random permutation, random direction triples.
    Rng rng(p.seed);
    auto half = make_field(p.m);
    Domain dom = Domain::over_product(half);
    auto perm = rng.permutation(u32(pw2(p.m)));
    TruthTable f(2 * p.m);
    for (u32 w = 0; w < f.size(); ++w)
        f.set(w, half->trace_bit(half->mul(dom.hi(w), perm[dom.lo(w)])));
    auto gstar = dual_of_bent(f, dom);
    int failures = 0;
    for (int t = 0; t < p.trials; ++t) {
        std::vector<u64> draw;
        do {
            draw.clear();
            for (int i = 0; i < 3; ++i) draw.push_back(1 + rng.below(u32(f.size() - 1)));
        } while (mask_rank(draw) != 3);
        std::vector<u32> us(draw.begin(), draw.end());
        if (!condition_a_check(gstar, us)) ++failures;
    }
    add(r, p.m,
        "generic bent duals fail the linearity identity for random direction "
        "triples",
        failures > 0,
        std::to_string(failures) + " of " + std::to_string(p.trials) +
            " random triples failed it");
    return r;
}

// ---------------------------------------------------------------------------
// nvec: perturbed norm form with subfield coefficients
// ---------------------------------------------------------------------------
SuiteResult suite_nvec(const SuiteParams& p) {
    SuiteResult r = fresh("nvec");
    require_m(p, 2, 5, "nvec");
    if (p.m < 3) {
        observe(r, "perturbed norm form", "needs k >= 3 directions, so m >= 3; skipped");
        return r;
    }
    auto tw = make_tower(p.m);
    auto basis = self_dual_basis(tw->small());
    std::vector<u32> us(basis.begin() + 1, basis.end());
    const u32 u1 = basis[0];
    Rng rng(p.seed);

    auto product = ReducedPolynomial::product_of_all(p.m);
    auto F = niho_general(u1, us, product, tw);
    add(r, p.m, "full-arity switch over a self-dual basis keeps the maximal count",
        probe_maximal(F).maximal, "k=" + std::to_string(p.m));
    add(r, p.m, "dual identity holds pointwise outside the subfield copy",
        niho_general_dual_check(F, u1, us, product, *tw));

    int mindeg = 1 << 30, maxdeg = -1, outside = 0;
    for (u32 c = 1; c < tw->big().size() && outside < 12; ++c) {
        if (tw->in_image(c)) continue;
        ++outside;
        int d = algebraic_degree(component(F, c));
        mindeg = std::min(mindeg, d);
        maxdeg = std::max(maxdeg, d);
    }
    add(r, p.m, "components outside the subfield copy reach algebraic degree m",
        mindeg == p.m && maxdeg == p.m,
        std::to_string(outside) + " components, degrees in [" + std::to_string(mindeg) +
            "," + std::to_string(maxdeg) + "]");

    int random_ok = 0;
    const int runs = std::max(1, p.trials / 4);
    for (int t = 0; t < runs; ++t) {
        auto R = ReducedPolynomial::random(p.m, rng);
        auto Ft = niho_general(u1, us, R, tw);
        if (probe_maximal(Ft).maximal && niho_general_dual_check(Ft, u1, us, R, *tw))
            ++random_ok;
    }
    add(r, p.m, "random switch polynomials keep the maximal count and the dual identity",
        random_ok == runs, std::to_string(random_ok) + "/" + std::to_string(runs));

    u32 outside_b = 0;
    for (u32 c = 1; c < tw->big().size(); ++c)
        if (!tw->in_image(c)) {
            outside_b = c;
            break;
        }
    add(r, p.m, "the stated affine forms give the dual derivatives along the directions",
        niho_dual_derivative_check(*tw, u1, us, outside_b), "b=" + hexstr(outside_b));
    return r;
}

// ---------------------------------------------------------------------------
// niho-k2: the two-term perturbation with big-field coefficients
// ---------------------------------------------------------------------------
SuiteResult suite_niho_k2(const SuiteParams& p) {
    SuiteResult r = fresh("niho-k2");
    require_m(p, 2, 5, "niho-k2");
    auto tw = make_tower(p.m);
    auto all = niho_k2_parameters(*tw);
    auto outside = niho_k2_parameters(*tw, true);
    add(r, p.m, "valid coefficient pairs exist", !all.empty(),
        std::to_string(all.size()) + " pairs, " + std::to_string(outside.size()) +
            " with both coefficients outside the subfield copy");

    const size_t probe_stride = p.m <= 4 ? 1 : stride_for(all.size(), 300);
    size_t probed = 0;
    bool max_ok = true;
    std::string max_fail;
    for (size_t i = 0; i < all.size(); i += probe_stride) {
        auto [u1, u2] = all[i];
        ++probed;
        if (!probe_maximal(niho_k2(u1, u2, tw)).maximal && max_ok) {
            max_ok = false;
            max_fail = "(u1,u2)=(" + hexstr(u1) + "," + hexstr(u2) + ")";
        }
    }
    add(r, p.m, "every valid pair keeps the maximal bent-component count", max_ok,
        max_ok ? std::to_string(probed) + " of " + std::to_string(all.size()) +
                     (probe_stride == 1 ? " pairs (exhaustive)" : " pairs (sampled)")
               : max_fail);

    const size_t dual_stride = stride_for(outside.size(), 24);
    size_t duals = 0;
    bool dual_ok = true;
    std::string dual_fail;
    for (size_t i = 0; i < outside.size(); i += dual_stride) {
        auto [u1, u2] = outside[i];
        ++duals;
        if (!niho_k2_dual_check(niho_k2(u1, u2, tw), u1, u2, *tw) && dual_ok) {
            dual_ok = false;
            dual_fail = "(u1,u2)=(" + hexstr(u1) + "," + hexstr(u2) + ")";
        }
    }
    add(r, p.m, "dual identity holds pointwise for components outside the subfield copy",
        dual_ok, dual_ok ? std::to_string(duals) + " pairs sampled" : dual_fail);
    return r;
}

// ---------------------------------------------------------------------------
// rt: subfield components of the two-term family are products of two
// linear forms; one of them is forced linear
// ---------------------------------------------------------------------------
SuiteResult suite_rt(const SuiteParams& p) {
    SuiteResult r = fresh("rt");
    require_m(p, 2, 5, "rt");
    auto tw = make_tower(p.m);
    auto outside = niho_k2_parameters(*tw, true);
    if (outside.empty()) {
        add(r, p.m, "coefficient pairs outside the subfield copy exist", false, "");
        return r;
    }

    const size_t stride = stride_for(outside.size(), 36);
    size_t checked = 0, dependents = 0;
    bool tri_ok = true;
    std::string tri_fail;
    for (size_t i = 0; i < outside.size(); i += stride) {
        auto [u1, u2] = outside[i];
        auto F = niho_k2(u1, u2, tw);
        auto rt = niho_k2_subfield_spectrum_check(F, u1, u2, *tw);
        ++checked;
        dependents += rt.any_dependent;
        if (!(rt.ok && rt.any_dependent) && tri_ok) {
            tri_ok = false;
            tri_fail = "(u1,u2)=(" + hexstr(u1) + "," + hexstr(u2) + ")";
        }
    }
    add(r, p.m,
        "subfield-component spectra match the two-linear-forms trichotomy "
        "(one-point 2^n, or +-2^(n-1) on a four-point set)",
        tri_ok, tri_ok ? std::to_string(checked) + " pairs sampled" : tri_fail);
    add(r, p.m,
        "every pair has a dependent case: some subfield component collapses "
        "to one linear form",
        dependents == checked,
        std::to_string(dependents) + "/" + std::to_string(checked));

    // Component-level nonlinearity for a handful of pairs: the dependent
    // component is linear (nonlinearity 0), every independent one sits at
    // exactly 2^(n-2), so the function-level minimum collapses to 0.
    const int n = 2 * p.m;
    const size_t stride2 = stride_for(outside.size(), 6);
    bool nl_ok = true;
    std::string nl_fail;
    size_t nl_pairs = 0;
    for (size_t i = 0; i < outside.size(); i += stride2) {
        auto [u1, u2] = outside[i];
        auto F = niho_k2(u1, u2, tw);
        ++nl_pairs;
        u64 zeros = 0;
        bool values_ok = true;
        for (u32 w = 1; w < tw->big().size(); ++w) {
            if (!tw->in_image(w)) continue;
            u32 nl = nonlinearity_bool(walsh_spectrum(component(F, w), F.domain()));
            if (nl == 0)
                ++zeros;
            else
                values_ok = values_ok && nl == pw2(n - 2);
        }
        auto scan = scan_components(F, p.jobs);
        bool pair_ok = values_ok && zeros >= 1 && scan.nonlinearity == 0 &&
                       tw->in_image(scan.nonlinearity_argmin);
        if (!pair_ok && nl_ok) {
            nl_ok = false;
            nl_fail = "(u1,u2)=(" + hexstr(u1) + "," + hexstr(u2) + ")";
        }
    }
    add(r, p.m,
        "independent-case components have nonlinearity exactly 2^(n-2); the "
        "forced linear component drags the function-level minimum to 0",
        nl_ok, nl_ok ? std::to_string(nl_pairs) + " pairs, all subfield components" : nl_fail);
    return r;
}

// ---------------------------------------------------------------------------
// diff: differential rows of the two-term family split by one trace bit
// ---------------------------------------------------------------------------
SuiteResult suite_diff(const SuiteParams& p) {
    SuiteResult r = fresh("diff");
    require_m(p, 2, 5, "diff");
    auto tw = make_tower(p.m);
    auto outside = niho_k2_parameters(*tw, true);
    if (outside.empty()) {
        add(r, p.m, "coefficient pairs outside the subfield copy exist", false, "");
        return r;
    }
    const size_t stride = stride_for(outside.size(), 24);
    size_t checked = 0;
    bool ok = true;
    std::string fail;
    for (size_t i = 0; i < outside.size(); i += stride) {
        auto [u1, u2] = outside[i];
        auto F = niho_k2(u1, u2, tw);
        auto dc = niho_k2_diff_check(F, u1, u2, *tw, p.jobs);
        ++checked;
        bool sets = dc.ok;
        for (u64 v : dc.values_bit1) sets = sets && (v == 0 || v == 2);
        for (u64 v : dc.values_bit0)
            sets = sets && (v == 0 || v == pw2(p.m - 1) || v == pw2(p.m));
        if (!sets && ok) {
            ok = false;
            fail = "(u1,u2)=(" + hexstr(u1) + "," + hexstr(u2) + ")";
        }
    }
    add(r, p.m,
        "row values lie in {0, 2} when Tr(u2 a) = 1 and in {0, 2^(m-1), 2^m} "
        "when Tr(u2 a) = 0",
        ok, ok ? std::to_string(checked) + " pairs sampled" : fail);
    return r;
}

// directions for the product-domain family: u11 = 1 and the first two
// nonzero elements of the trace-zero hyperplane
MMParams mm_params_for(int j, const Field& half, int k_cap = 3) {
    std::vector<std::pair<u32, u32>> us;
    for (u32 z = 1; z < half.size() && int(us.size()) < k_cap - 1; ++z)
        if (half.trace_bit(z) == 0) us.push_back({half.frobenius(z, j), z});
    return MMParams{j, 1, us, ReducedPolynomial::product_of_all(int(us.size()) + 1)};
}

// ---------------------------------------------------------------------------
// mm: perturbed two-sided multiplication map on the product domain
// ---------------------------------------------------------------------------
SuiteResult suite_mm(const SuiteParams& p) {
    SuiteResult r = fresh("mm");
    require_m(p, 2, 5, "mm");
    auto half = make_field(p.m);
    Rng rng(p.seed);

    bool max_ok = true, dual_ok = true, base_ok = true;
    std::string max_fail, dual_fail, base_fail;
    int js = 0;
    for (int j = 1; j < std::max(2, p.m); ++j) {
        ++js;
        auto params = mm_params_for(j, *half);
        auto F = mm_construct(params, half);
        if (!probe_maximal(F).maximal && max_ok) {
            max_ok = false;
            max_fail = "j=" + std::to_string(j);
        }
        const u32 q = u32(pw2(p.m));
        std::vector<std::pair<u32, u32>> pts{{1, 0}, {q - 1, 1}};
        pts.emplace_back(1 + rng.below(q - 1), rng.below(q));
        for (auto [a, b] : pts)
            if (!mm_dual_check(F, params, a, b) && dual_ok) {
                dual_ok = false;
                dual_fail = "j=" + std::to_string(j) + ", (a,b)=(" + hexstr(a) + "," +
                            hexstr(b) + ")";
            }

        MMParams plain{j, 1, params.us,
                       ReducedPolynomial::zero(int(params.us.size()) + 1)};
        auto G = mm_construct(plain, half);
        auto rep = analyze(G, p.jobs);
        if (!(rep.is_maximal && rep.s_f.equals_subfield) && base_ok) {
            base_ok = false;
            base_fail = "j=" + std::to_string(j);
        }
    }
    add(r, p.m, "the unperturbed multiplication map is maximal with the lo-half "
                "copy as its non-bent set",
        base_ok, base_ok ? std::to_string(js) + " automorphism exponents" : base_fail);
    add(r, p.m, "perturbation keeps the maximal bent-component count", max_ok,
        max_ok ? std::to_string(js) + " automorphism exponents" : max_fail);
    add(r, p.m, "dual identity holds at sampled components", dual_ok,
        dual_ok ? std::to_string(3 * js) + " components" : dual_fail);
    return r;
}

// ---------------------------------------------------------------------------
// mm-outside: the perturbed family leaves the completeness class
// ---------------------------------------------------------------------------
SuiteResult suite_mm_outside(const SuiteParams& p) {
    SuiteResult r = fresh("mm-outside");
    require_m(p, 2, 5, "mm-outside");
    auto half = make_field(p.m);
    const u32 q = u32(pw2(p.m));

    bool unpert_ok = true, pert_ok = true;
    std::string u_fail, p_fail;
    u64 fails_total = 0, comps_total = 0;
    int js = 0;
    for (int j = 1; j < std::max(2, p.m); ++j) {
        ++js;
        auto params = mm_params_for(j, *half);
        auto F = mm_construct(params, half);
        MMParams plain{j, 1, params.us,
                       ReducedPolynomial::zero(int(params.us.size()) + 1)};
        auto G = mm_construct(plain, half);

        const size_t stride = p.m <= 4 ? 1 : 25;
        u64 fails = 0, comps = 0;
        for (u64 idx = 0; idx < u64(q - 1) * q; idx += stride) {
            const u32 a = 1 + u32(idx / q), b = u32(idx % q);
            const u32 w = F.domain().pack(a, b);
            ++comps;
            if (!mm_completeness_test(component(F, w), F.domain())) ++fails;
            if (!mm_completeness_test(component(G, w), G.domain()) && unpert_ok) {
                unpert_ok = false;
                u_fail = "j=" + std::to_string(j) + ", (a,b)=(" + hexstr(a) + "," +
                         hexstr(b) + ")";
            }
        }
        fails_total += fails;
        comps_total += comps;
        if (fails == 0 && pert_ok) {
            pert_ok = false;
            p_fail = "j=" + std::to_string(j) + ": every sampled component passed";
        }
    }
    add(r, p.m,
        "every component of the unperturbed map passes the second-derivative "
        "slice test",
        unpert_ok, unpert_ok ? std::to_string(comps_total) + " components" : u_fail);
    add(r, p.m,
        "the perturbed function has components failing it (it left the class)",
        pert_ok,
        pert_ok ? std::to_string(fails_total) + " of " + std::to_string(comps_total) +
                      " bent components fail across " + std::to_string(js) +
                      " automorphism exponents"
                : p_fail);
    return r;
}

// ---------------------------------------------------------------------------
// bino: x^(2^m+1) + x^(2^i+1) is maximal exactly at i = 0
// ---------------------------------------------------------------------------
SuiteResult suite_bino(const SuiteParams& p) {
    SuiteResult r = fresh("bino");
    const int m_lo = p.m_max > 0 ? 2 : p.m;
    const int m_hi = p.m_max > 0 ? p.m_max : p.m;
    if (m_lo < 2 || m_hi > 5 || m_lo > m_hi)
        throw std::invalid_argument("suite bino supports m (or 2..m-max) within [2,5]");

    for (int m = m_lo; m <= m_hi; ++m) {
        auto tw = make_tower(m);
        add(r, m, "m=" + std::to_string(m) + ": the i=0 pairing is maximal",
            probe_maximal(binomial_pair(0, tw)).maximal);

        bool none_max = true, witness_ok = true, explicit_ok = true;
        std::string nm_fail, w_fail, e_fail;
        int explicit_cases = 0;
        for (int i = 1; i < m; ++i) {
            auto F = binomial_pair(i, tw);
            if (probe_maximal(F).maximal && none_max) {
                none_max = false;
                nm_fail = "i=" + std::to_string(i);
            }
            auto wit = binomial_nonbent_witness(i, *tw);
            bool ok = wit.has_value();
            if (ok) {
                ok = !tw->in_image(*wit) &&
                     linearized_roots(*wit, i, *tw).size() > 1 &&
                     !is_bent(walsh_spectrum(component(F, *wit), F.domain()));
            }
            if (!ok && witness_ok) {
                witness_ok = false;
                w_fail = "i=" + std::to_string(i);
            }
            auto ex = binomial_explicit_witness(i, *tw);
            if (val2(u64(i)) == val2(u64(m))) {
                ++explicit_cases;
                bool eok = ex.has_value() && linearized_roots(*ex, i, *tw).size() > 1 &&
                           !is_bent(walsh_spectrum(component(F, *ex), F.domain()));
                if (!eok && explicit_ok) {
                    explicit_ok = false;
                    e_fail = "i=" + std::to_string(i);
                }
            } else if (ex.has_value() && explicit_ok) {
                explicit_ok = false;
                e_fail = "i=" + std::to_string(i) + ": unexpected closed-form witness";
            }
        }
        if (m >= 2) {
            add(r, m, "m=" + std::to_string(m) + ": no pairing with i >= 1 is maximal",
                none_max, none_max ? std::to_string(m - 1) + " exponents" : nm_fail);
            if (m >= 2 && m - 1 >= 1) {
                add(r, m,
                    "m=" + std::to_string(m) +
                        ": each i >= 1 has a non-bent witness with a nontrivial kernel",
                    witness_ok, witness_ok ? "" : w_fail);
                add(r, m,
                    "m=" + std::to_string(m) +
                        ": the closed-form witness exists exactly when v2(i) = v2(m)",
                    explicit_ok,
                    explicit_ok ? std::to_string(explicit_cases) + " closed-form cases"
                                : e_fail);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// gauss-count: the trace-kernel count over intermediate subfields
// ---------------------------------------------------------------------------
SuiteResult suite_gauss_count(const SuiteParams& p) {
    SuiteResult r = fresh("gauss-count");
    const int m_lo = p.m_max > 0 ? 2 : p.m;
    const int m_hi = p.m_max > 0 ? p.m_max : p.m;
    if (m_lo < 2 || m_hi > 16 || m_lo > m_hi)
        throw std::invalid_argument("suite gauss-count supports m (or 2..m-max) within [2,16]");

    int cases = 0, closed = 0;
    bool nonzero_ok = true, closed_ok = true;
    std::string nz_fail, cf_fail;
    for (int m = m_lo; m <= m_hi; ++m)
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto c = count_N_set(m, d);
            ++cases;
            if (c.count == 0 && nonzero_ok) {
                nonzero_ok = false;
                nz_fail = "(m,d)=(" + std::to_string(m) + "," + std::to_string(d) + ")";
            }
            if (c.closed_form_applies) {
                ++closed;
                if (c.count != c.closed_form && closed_ok) {
                    closed_ok = false;
                    cf_fail = "(m,d)=(" + std::to_string(m) + "," + std::to_string(d) +
                              "): count " + std::to_string(c.count) + " != " +
                              std::to_string(c.closed_form);
                }
            }
        }
    add(r, m_hi, "the kernel count is nonzero for every proper subfield", nonzero_ok,
        nonzero_ok ? std::to_string(cases) + " (m, d) cases" : nz_fail);
    add(r, m_hi, "count = 2^(m-d) - 1 whenever gcd(2^d - 1, m/d) = 1", closed_ok,
        closed_ok ? std::to_string(closed) + " of " + std::to_string(cases) +
                        " cases have the closed form"
                  : cf_fail);
    return r;
}

using SuiteFn = SuiteResult (*)(const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg{
        {"wt", suite_wt},
        {"conj-niho", suite_conj_niho},
        {"three-valued", suite_three_valued},
        {"table1", suite_table1},
        {"linear-h", suite_linear_h},
        {"cor2", suite_cor2},
        {"condA", suite_condA},
        {"nvec", suite_nvec},
        {"niho-k2", suite_niho_k2},
        {"rt", suite_rt},
        {"diff", suite_diff},
        {"mm", suite_mm},
        {"mm-outside", suite_mm_outside},
        {"bino", suite_bino},
        {"gauss-count", suite_gauss_count},
    };
    return reg;
}

} // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

SuiteResult run_suite(const std::string& id, const SuiteParams& p) {
    for (const auto& [name, fn] : registry())
        if (name == id) return fn(p);
    throw std::invalid_argument("unknown suite id: " + id);
}

std::vector<SuiteResult> run_all_suites(const SuiteParams& p) {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) out.push_back(fn(p));
    return out;
}

} // namespace bentcomp
