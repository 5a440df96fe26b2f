#include <doctest.h>

#include "bentcomp/analysis.hpp"
#include "bentcomp/rng.hpp"

using namespace bentcomp;

namespace {

void check_same(const ComponentScan& a, const ComponentScan& b) {
    CHECK(a.bent_count == b.bent_count);
    CHECK(a.nonbent == b.nonbent);
    CHECK(a.nonlinearity == b.nonlinearity);
    CHECK(a.nonlinearity_argmin == b.nonlinearity_argmin);
    CHECK(a.walsh_max == b.walsh_max);
    CHECK(a.plateau_counts == b.plateau_counts);
    CHECK(a.non_plateaued == b.non_plateaued);
}

VectorialFunction random_fn(const Domain& d, Rng& rng) {
    std::vector<u32> t(d.size());
    for (auto& v : t) v = rng.below(d.size());
    return VectorialFunction(d, std::move(t));
}

} // namespace

TEST_CASE("parallel scans equal the serial reference for any worker count") {
    Rng rng(42);
    std::vector<VectorialFunction> cases;

    auto F8 = make_field(8);
    Domain df = Domain::over_field(F8);
    cases.push_back(random_fn(df, rng));
    {
        std::vector<u32> t(256);
        for (u32 x = 0; x < 256; ++x) t[x] = F8->pow(x, 17); // 2^4 + 1
        cases.emplace_back(df, std::move(t));
    }
    Domain dp = Domain::over_product(make_field(3));
    cases.push_back(random_fn(dp, rng));

    for (const auto& f : cases) {
        ComponentScan ref = serial::scan_components(f);
        DiffSpectrum dref = serial::differential_spectrum(f);
        for (int jobs : {1, 2, 4, 8}) {
            check_same(scan_components(f, jobs), ref);
            CHECK(differential_spectrum(f, jobs).histogram == dref.histogram);
        }
        // default worker count (hardware concurrency)
        check_same(scan_components(f), ref);
        CHECK(differential_spectrum(f).histogram == dref.histogram);
    }
}

TEST_CASE("repeated parallel runs are bit-identical") {
    Rng rng(43);
    Domain d = Domain::over_field(make_field(9));
    VectorialFunction f = random_fn(d, rng);
    ComponentScan first = scan_components(f, 4);
    for (int rep = 0; rep < 3; ++rep) check_same(scan_components(f, 4), first);
}
