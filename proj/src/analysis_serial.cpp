#include "bentcomp/analysis.hpp"

namespace bentcomp {
namespace serial {

// Reference implementations built from the public single-function operations,
// deliberately simple; the parallel kernels are tested against these.

ComponentScan scan_components(const VectorialFunction& F) {
    const Domain& d = F.domain();
    u32 sz = d.size();
    int n = d.dim();
    ComponentScan r;
    u32 best = 0xFFFFFFFFu;
    for (u32 a = 1; a < sz; ++a) {
        WalshSpectrum s = walsh_spectrum(component(F, a), d);
        auto k = plateau_k(s);
        if (k && *k == 0) ++r.bent_count;
        else r.nonbent.push_back(a);
        if (k) ++r.plateau_counts[*k];
        else ++r.non_plateaued;
        u32 nl = nonlinearity_bool(s);
        if (nl < best) {
            best = nl;
            r.nonlinearity_argmin = a;
        }
        u32 mx = u32(s.max_abs());
        if (mx > r.walsh_max) r.walsh_max = mx;
    }
    r.nonlinearity = best;
    (void)n;
    return r;
}

DiffSpectrum differential_spectrum(const VectorialFunction& F) {
    const Domain& d = F.domain();
    DiffSpectrum r;
    for (u32 a = 1; a < d.size(); ++a)
        for (u32 c : delta_row(F, a)) ++r.histogram[c];
    return r;
}

} // namespace serial
} // namespace bentcomp
