// Compares the OpenMP component-scan and differential-spectrum kernels
// against their single-threaded reference implementations on the norm form
// x^(2^m+1), checking agreement and reporting wall times and speedups.
//
// Usage: bentcomp-bench [n ...]   (defaults: 10 12 14 for scans, 10 12 for
// differential spectra; n must be even)
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "bentcomp/analysis.hpp"
#include "bentcomp/expr.hpp"
#include "bentcomp/field.hpp"

using namespace bentcomp;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

VectorialFunction norm_form(int n) {
    return compile("x^(2^m+1)", Domain::over_field(make_field(n)));
}

void bench_scan(int n) {
    auto F = norm_form(n);
    auto t0 = std::chrono::steady_clock::now();
    auto ref = serial::scan_components(F);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = scan_components(F);
    double tp = seconds(t0);
    bool same = ref.bent_count == par.bent_count && ref.nonbent == par.nonbent &&
                ref.nonlinearity == par.nonlinearity &&
                ref.walsh_max == par.walsh_max &&
                ref.plateau_counts == par.plateau_counts;
    std::printf("component scan      n=%2d  serial %8.3fs  parallel %8.3fs  "
                "speedup %5.2fx  agreement %s  (bent %llu)\n",
                n, ts, tp, tp > 0 ? ts / tp : 0.0, same ? "ok" : "MISMATCH",
                (unsigned long long)par.bent_count);
    if (!same) std::exit(1);
}

void bench_diff(int n) {
    auto F = norm_form(n);
    auto t0 = std::chrono::steady_clock::now();
    auto ref = serial::differential_spectrum(F);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = differential_spectrum(F);
    double tp = seconds(t0);
    bool same = ref.histogram == par.histogram;
    std::printf("differential table  n=%2d  serial %8.3fs  parallel %8.3fs  "
                "speedup %5.2fx  agreement %s  (%zu distinct values)\n",
                n, ts, tp, tp > 0 ? ts / tp : 0.0, same ? "ok" : "MISMATCH",
                par.histogram.size());
    if (!same) std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> ns;
    for (int i = 1; i < argc; ++i) ns.push_back(std::atoi(argv[i]));
    for (int n : ns)
        if (n < 4 || n % 2 != 0) {
            std::fprintf(stderr, "n must be even and at least 4, got %d\n", n);
            return 2;
        }

    const std::vector<int> scan_ns = ns.empty() ? std::vector<int>{10, 12, 14} : ns;
    const std::vector<int> diff_ns = ns.empty() ? std::vector<int>{10, 12} : ns;
    for (int n : scan_ns) bench_scan(n);
    for (int n : diff_ns) bench_diff(n);
    return 0;
}
