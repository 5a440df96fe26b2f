#include "bentcomp/analysis.hpp"

#include <stdexcept>

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

// Component spectrum classification without materializing the reindexed
// spectrum: max |W| and the plateau class are invariant under the dual-basis
// permutation, so the butterfly output is classified directly.
// plat: k of a k-plateaued component, or -2 if not plateaued.
void classify_component(const VectorialFunction& F, u32 a, std::vector<int>& buf,
                        u32& max_abs, int& plat) {
    const Domain& d = F.domain();
    u32 sz = d.size();
    int n = d.dim();
    u32 cf = d.coord_form(a);
    const u32* t = F.table().data();
    for (u32 x = 0; x < sz; ++x) buf[x] = 1 - 2 * dot(cf, t[x]);
    for (u32 len = 1; len < sz; len <<= 1)
        for (u32 i = 0; i < sz; i += len << 1)
            for (u32 j = i; j < i + len; ++j) {
                int p = buf[j], q = buf[j + len];
                buf[j] = p + q;
                buf[j + len] = p - q;
            }
    u32 c = 0;
    bool mixed = false;
    i64 sq = 0;
    for (u32 x = 0; x < sz; ++x) {
        u32 av = u32(buf[x] < 0 ? -buf[x] : buf[x]);
        sq += i64(av) * av;
        if (!av) continue;
        if (!c) c = av;
        else if (av != c) mixed = true;
    }
    if (sq != i64(sz) * sz) throw std::logic_error("component spectrum violates Parseval");
    u32 mx = c;
    if (mixed)
        for (u32 x = 0; x < sz; ++x) {
            u32 av = u32(buf[x] < 0 ? -buf[x] : buf[x]);
            if (av > mx) mx = av;
        }
    max_abs = mx;
    if (mixed) {
        plat = -2;
    } else {
        int lg = 0;
        while ((u32(1) << lg) < c) ++lg;
        plat = 2 * lg - n;
    }
}

ComponentScan aggregate(const Domain& d, const std::vector<u32>& amax,
                        const std::vector<int>& aplat) {
    ComponentScan r;
    u32 sz = d.size();
    int n = d.dim();
    u32 best = 0xFFFFFFFFu;
    for (u32 a = 1; a < sz; ++a) {
        bool bent = aplat[a] == 0;
        if (bent) ++r.bent_count;
        else r.nonbent.push_back(a);
        if (aplat[a] == -2) ++r.non_plateaued;
        else ++r.plateau_counts[aplat[a]];
        u32 nl = (u32(1) << (n - 1)) - amax[a] / 2;
        if (nl < best) {
            best = nl;
            r.nonlinearity_argmin = a;
        }
        if (amax[a] > r.walsh_max) r.walsh_max = amax[a];
    }
    r.nonlinearity = best;
    return r;
}

} // namespace

ComponentScan scan_components(const VectorialFunction& F, int jobs) {
    const Domain& d = F.domain();
    u32 sz = d.size();
    std::vector<u32> amax(sz, 0);
    std::vector<int> aplat(sz, 0);
    int nt = resolve_jobs(jobs);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
    {
        std::vector<int> buf(sz);
#pragma omp for schedule(dynamic, 4)
        for (i64 a = 1; a < i64(sz); ++a)
            classify_component(F, u32(a), buf, amax[a], aplat[a]);
    }
#else
    (void)nt;
    std::vector<int> buf(sz);
    for (u32 a = 1; a < sz; ++a) classify_component(F, a, buf, amax[a], aplat[a]);
#endif
    return aggregate(d, amax, aplat);
}

DiffSpectrum differential_spectrum(const VectorialFunction& F, int jobs) {
    const Domain& d = F.domain();
    u32 sz = d.size();
    const u32* t = F.table().data();
    int nt = resolve_jobs(jobs);
    std::vector<std::vector<u64>> partial;
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
    {
#pragma omp single
        partial.assign(omp_get_num_threads(), {});
        std::vector<u64> hist(sz + 1, 0);
        std::vector<u32> row(sz, 0);
        std::vector<u32> touched;
        touched.reserve(sz);
#pragma omp for schedule(dynamic, 4)
        for (i64 a = 1; a < i64(sz); ++a) {
            for (u32 x = 0; x < sz; ++x) {
                u32 b = t[x ^ u32(a)] ^ t[x];
                if (!row[b]++) touched.push_back(b);
            }
            hist[0] += sz - touched.size();
            for (u32 b : touched) {
                ++hist[row[b]];
                row[b] = 0;
            }
            touched.clear();
        }
        partial[omp_get_thread_num()] = std::move(hist);
    }
#else
    (void)nt;
    {
        std::vector<u64> hist(sz + 1, 0);
        std::vector<u32> row(sz, 0);
        std::vector<u32> touched;
        for (u32 a = 1; a < sz; ++a) {
            for (u32 x = 0; x < sz; ++x) {
                u32 b = t[x ^ a] ^ t[x];
                if (!row[b]++) touched.push_back(b);
            }
            hist[0] += sz - touched.size();
            for (u32 b : touched) {
                ++hist[row[b]];
                row[b] = 0;
            }
            touched.clear();
        }
        partial.push_back(std::move(hist));
    }
#endif
    DiffSpectrum r;
    std::vector<u64> total(sz + 1, 0);
    for (auto& h : partial)
        for (u32 i = 0; i <= sz && i < u32(h.size()); ++i) total[i] += h[i];
    for (u32 v = 0; v <= sz; ++v)
        if (total[v]) r.histogram[v] = total[v];
    return r;
}

AnalysisReport analyze(const VectorialFunction& F, int jobs) {
    const Domain& d = F.domain();
    ComponentScan scan = scan_components(F, jobs);
    AnalysisReport rep;
    rep.n = d.dim();
    rep.m = d.has_canonical_subfield() ? d.m_half() : -1;
    rep.domain_is_product = d.is_product();
    rep.func_desc = F.desc();
    rep.bent_count = scan.bent_count;
    rep.nonlinearity = scan.nonlinearity;
    rep.nonlinearity_argmin = scan.nonlinearity_argmin;
    rep.walsh_max = scan.walsh_max;
    rep.plateau_counts = scan.plateau_counts;
    rep.non_plateaued = scan.non_plateaued;
    rep.is_maximal = d.dim() % 2 == 0 &&
                     scan.bent_count == (u64(1) << d.dim()) - (u64(1) << d.dim() / 2);

    rep.s_f.size = scan.nonbent.size();
    // S_F together with 0 is a subspace iff |S_F|+1 = 2^rank(span S_F)
    u32 basis[32] = {0};
    int rank = 0;
    for (u32 s : scan.nonbent) {
        u32 v = s;
        while (v) {
            int h = 31 - __builtin_clz(v);
            if (!basis[h]) {
                basis[h] = v;
                ++rank;
                break;
            }
            v ^= basis[h];
        }
    }
    rep.s_f.is_subspace = scan.nonbent.size() + 1 == u64(1) << rank;
    if (rep.s_f.is_subspace && d.has_canonical_subfield() &&
        scan.nonbent.size() + 1 == u64(1) << d.m_half()) {
        bool all = true;
        for (u32 s : scan.nonbent)
            if (!d.in_canonical_subfield(s)) { all = false; break; }
        rep.s_f.equals_subfield = all;
    }
    if (rep.bent_count + rep.s_f.size != d.size() - 1)
        throw std::logic_error("component classification lost a component");
    return rep;
}

BentCountProbe probe_maximal(const VectorialFunction& F) {
    const Domain& d = F.domain();
    u32 sz = d.size();
    int n = d.dim();
    BentCountProbe r;
    if (n % 2) return r;
    u64 allowed_nonbent = (u64(1) << n / 2) - 1;
    u64 nonbent = 0;
    int c = 1 << n / 2;
    std::vector<int> buf(sz);
    const u32* t = F.table().data();
    for (u32 a = 1; a < sz; ++a) {
        u32 cf = d.coord_form(a);
        for (u32 x = 0; x < sz; ++x) buf[x] = 1 - 2 * dot(cf, t[x]);
        for (u32 len = 1; len < sz; len <<= 1)
            for (u32 i = 0; i < sz; i += len << 1)
                for (u32 j = i; j < i + len; ++j) {
                    int p = buf[j], q = buf[j + len];
                    buf[j] = p + q;
                    buf[j + len] = p - q;
                }
        bool bent = true;
        for (u32 x = 0; x < sz; ++x)
            if (buf[x] != c && buf[x] != -c) { bent = false; break; }
        if (bent) ++r.bent_count;
        else if (++nonbent > allowed_nonbent) return r;
    }
    r.maximal = nonbent == allowed_nonbent;
    return r;
}

} // namespace bentcomp
