#include "bentcomp/search.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bentcomp {

namespace {

u64 pw2(int e) { return u64{1} << e; }

std::vector<u32> binomial_table(const Field& f, u32 d1, u32 d2) {
    std::vector<u32> t(f.size());
    for (u32 x = 0; x < f.size(); ++x)
        t[x] = f.pow(x, d1) ^ f.pow(x, d2);
    return t;
}

// Reference differential histograms, in tag-precedence order. Families whose
// histogram coincides with an earlier entry collapse into the earlier tag.
std::vector<std::pair<std::string, std::map<u64, u64>>>
reference_profiles(const Domain& dom, int jobs) {
    const Field& f = dom.whole_field();
    const int m = f.degree() / 2;
    std::vector<std::pair<std::string, std::map<u64, u64>>> refs;

    std::vector<u32> norm(f.size());
    for (u32 x = 0; x < f.size(); ++x) norm[x] = f.mul(f.frobenius(x, m), x);
    refs.emplace_back("norm",
                      differential_spectrum({dom, std::move(norm)}, jobs).histogram);

    for (int e = 0; e < m; ++e) {
        std::vector<u32> t(f.size());
        for (u32 x = 0; x < f.size(); ++x)
            t[x] = f.mul(f.frobenius(x, e), x ^ f.frobenius(x, m));
        auto h = differential_spectrum({dom, std::move(t)}, jobs).histogram;
        const bool dup = std::any_of(refs.begin(), refs.end(),
                                     [&](const auto& r) { return r.second == h; });
        if (!dup) refs.emplace_back("trace_e" + std::to_string(e), std::move(h));
    }
    return refs;
}

struct Checkpoint {
    int n = 0;
    i64 last_completed = 0; // outer index (d1); 0 = nothing done yet
    std::vector<BinomialHit> hits;
};

Checkpoint load_checkpoint(const std::string& path, int n) {
    Checkpoint cp;
    cp.n = n;
    std::ifstream in(path);
    if (!in) return cp; // no file yet: fresh start
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("n").get<int>() != n)
        throw std::invalid_argument("checkpoint is for n=" +
                                    std::to_string(j.at("n").get<int>()));
    cp.last_completed = j.at("last_completed_outer_index").get<i64>();
    for (const auto& h : j.at("hits")) {
        BinomialHit hit;
        hit.n = n;
        hit.d1 = h.at("d1").get<u32>();
        hit.d2 = h.at("d2").get<u32>();
        hit.bent_count = h.at("bent_count").get<u64>();
        hit.profile_tag = h.at("profile_tag").get<std::string>();
        cp.hits.push_back(std::move(hit));
    }
    return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    nlohmann::json hits = nlohmann::json::array();
    for (const auto& h : cp.hits)
        hits.push_back({{"d1", h.d1},
                        {"d2", h.d2},
                        {"bent_count", h.bent_count},
                        {"profile_tag", h.profile_tag}});
    nlohmann::json j{{"n", cp.n},
                     {"last_completed_outer_index", cp.last_completed},
                     {"hits", std::move(hits)}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
    out << j.dump(2) << '\n';
}

} // namespace

std::pair<u32, u32> canonical_pair(u32 d1, u32 d2, int n) {
    if (n < 2 || n > 30) throw std::invalid_argument("n out of range");
    const u64 q1 = pw2(n) - 1;
    u64 a = d1 % q1, b = d2 % q1;
    if (a == 0 || b == 0 || a == b)
        throw std::invalid_argument("exponents must be distinct and nonzero mod 2^n-1");
    std::pair<u32, u32> best{u32(std::min(a, b)), u32(std::max(a, b))};
    for (int j = 1; j < n; ++j) {
        a = a * 2 % q1;
        b = b * 2 % q1;
        best = std::min(best, {u32(std::min(a, b)), u32(std::max(a, b))});
    }
    return best;
}

BinomialSearchResult search_binomials(const BinomialSearchConfig& cfg) {
    if (cfg.n % 2 != 0)
        throw std::invalid_argument("two-exponent scan needs even n (no bent "
                                    "components exist in odd dimension)");
    if (cfg.n < 4 || cfg.n > 16) throw std::invalid_argument("n out of range [4,16]");

    Domain dom = Domain::over_field(make_field(cfg.n));
    const Field& f = dom.whole_field();
    const u32 q1 = f.order();
    const u64 max_bent = pw2(cfg.n) - pw2(cfg.n / 2);
    const auto refs = reference_profiles(dom, cfg.jobs);

    Checkpoint cp;
    cp.n = cfg.n;
    if (!cfg.checkpoint_path.empty())
        cp = load_checkpoint(cfg.checkpoint_path, cfg.n);

    BinomialSearchResult res;
    res.hits = cp.hits;

    u32 d1 = u32(cp.last_completed) + 1;
    for (; d1 + 1 <= q1 - 1; ++d1) {
        std::vector<u32> cands;
        for (u32 d2 = d1 + 1; d2 <= q1 - 1; ++d2)
            if (canonical_pair(d1, d2, cfg.n) == std::pair<u32, u32>{d1, d2})
                cands.push_back(d2);

        // Cheap early-exit probe in parallel; the rare survivors get the full
        // (and itself parallel) re-count afterwards, in ascending order.
        std::vector<char> survived(cands.size(), 0);
#ifdef _OPENMP
        const int jobs = cfg.jobs <= 0 ? omp_get_max_threads() : cfg.jobs;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (size_t i = 0; i < cands.size(); ++i) {
            VectorialFunction F(dom, binomial_table(f, d1, cands[i]));
            survived[i] = probe_maximal(F).maximal ? 1 : 0;
        }

        for (size_t i = 0; i < cands.size(); ++i) {
            if (!survived[i]) continue;
            VectorialFunction F(dom, binomial_table(f, d1, cands[i]),
                                "x^" + std::to_string(d1) + " + x^" +
                                    std::to_string(cands[i]));
            const u64 bent = scan_components(F, cfg.jobs).bent_count;
            if (bent != max_bent) continue; // probe overruled by the full count
            BinomialHit hit;
            hit.n = cfg.n;
            hit.d1 = d1;
            hit.d2 = cands[i];
            hit.bent_count = bent;
            hit.profile_tag = "other";
            const auto h = differential_spectrum(F, cfg.jobs).histogram;
            for (const auto& [tag, rh] : refs)
                if (rh == h) {
                    hit.profile_tag = tag;
                    break;
                }
            res.hits.push_back(std::move(hit));
        }

        res.pairs_examined += cands.size();
        cp.last_completed = d1;
        cp.hits = res.hits;
        if (!cfg.checkpoint_path.empty()) save_checkpoint(cfg.checkpoint_path, cp);
        if (cfg.budget_pairs > 0 && res.pairs_examined >= cfg.budget_pairs &&
            d1 + 1 <= q1 - 1) {
            res.next_outer = d1 + 1;
            return res; // budget exhausted at a row boundary; resumable
        }
    }

    res.complete = true;
    res.next_outer = d1;
    return res;
}

} // namespace bentcomp
