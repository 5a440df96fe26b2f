#include "bentcomp/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace bentcomp {

namespace {

using ojson = nlohmann::ordered_json;

std::string hexstr(u32 v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
}

ojson counts_object(const std::map<int, u64>& counts) {
    ojson o = ojson::object();
    for (const auto& [k, c] : counts) o[std::to_string(k)] = c;
    return o;
}

ReducedPolynomial switch_poly(const ConstructionSpec& s) {
    if (s.r_k < 2 || s.r_bits.size() != (size_t{1} << (s.r_k - 1)))
        throw std::invalid_argument("switch polynomial needs 2^(k-1) value bits");
    TruthTable t(s.r_k - 1);
    for (u32 p = 0; p < t.size(); ++p) t.set(p, s.r_bits[p] & 1);
    return ReducedPolynomial(s.r_k, std::move(t));
}

std::shared_ptr<const Tower> tower_of(const ConstructionSpec& s) {
    if (s.modulus_small == 0 && s.modulus_big == 0) return make_tower(s.m);
    const u32 ms = s.modulus_small ? s.modulus_small : registry_modulus(s.m);
    const u32 mb = s.modulus_big ? s.modulus_big : registry_modulus(2 * s.m);
    return make_tower(s.m, ms, mb);
}

} // namespace

std::string to_json(const AnalysisReport& r, int indent) {
    ojson j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["domain_is_product"] = r.domain_is_product;
    j["func_desc"] = r.func_desc;
    j["bent_count"] = r.bent_count;
    j["is_maximal"] = r.is_maximal;
    j["s_f"] = ojson{{"size", r.s_f.size},
                     {"is_subspace", r.s_f.is_subspace},
                     {"equals_subfield", r.s_f.equals_subfield}};
    j["nonlinearity"] = r.nonlinearity;
    j["nonlinearity_argmin"] = r.nonlinearity_argmin;
    j["walsh_max"] = r.walsh_max;
    j["plateau_counts"] = counts_object(r.plateau_counts);
    j["non_plateaued"] = r.non_plateaued;
    return j.dump(indent) + "\n";
}

std::string spectrum_csv(const WalshSpectrum& s) {
    std::string out = "w_hex,walsh\n";
    for (u32 w = 0; w < s.v.size(); ++w)
        out += hexstr(w) + "," + std::to_string(s.v[w]) + "\n";
    return out;
}

std::string histogram_csv(const DiffSpectrum& d) {
    std::string out = "delta,count\n";
    for (const auto& [delta, count] : d.histogram)
        out += std::to_string(delta) + "," + std::to_string(count) + "\n";
    return out;
}

std::string hits_csv(const std::vector<BinomialHit>& hits) {
    std::string out = "n,d1,d2,bent_count,profile_tag\n";
    for (const auto& h : hits)
        out += std::to_string(h.n) + "," + std::to_string(h.d1) + "," +
               std::to_string(h.d2) + "," + std::to_string(h.bent_count) + "," +
               h.profile_tag + "\n";
    return out;
}

std::string to_json(const ConstructionSpec& s, int indent) {
    ojson j;
    j["kind"] = s.kind;
    j["m"] = s.m;
    if (s.modulus_small) j["modulus_small"] = s.modulus_small;
    if (s.modulus_big) j["modulus_big"] = s.modulus_big;
    if (s.kind == "trace_perm") {
        j["e"] = s.e;
        j["h"] = s.h;
    } else if (s.kind == "niho_general") {
        j["u1"] = s.u1;
        j["us"] = s.us;
        j["r_k"] = s.r_k;
        j["r_bits"] = s.r_bits;
    } else if (s.kind == "niho_k2") {
        j["u1"] = s.u1;
        j["u2"] = s.u2;
    } else if (s.kind == "mm") {
        j["j"] = s.j;
        j["u11"] = s.u11;
        j["us"] = s.us_pairs;
        j["r_k"] = s.r_k;
        j["r_bits"] = s.r_bits;
    } else if (s.kind == "binomial") {
        j["i"] = s.i;
    } else {
        throw std::invalid_argument("unknown construction kind: " + s.kind);
    }
    return j.dump(indent) + "\n";
}

ConstructionSpec construction_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("construction JSON: ") + e.what());
    }
    ConstructionSpec s;
    try {
        s.kind = j.at("kind").get<std::string>();
        s.m = j.at("m").get<int>();
        s.modulus_small = j.value("modulus_small", 0u);
        s.modulus_big = j.value("modulus_big", 0u);
        if (s.kind == "trace_perm") {
            s.e = j.at("e").get<int>();
            s.h = j.at("h").get<std::vector<u32>>();
        } else if (s.kind == "niho_general") {
            s.u1 = j.at("u1").get<u32>();
            s.us = j.at("us").get<std::vector<u32>>();
            s.r_k = j.at("r_k").get<int>();
            s.r_bits = j.at("r_bits").get<std::vector<int>>();
        } else if (s.kind == "niho_k2") {
            s.u1 = j.at("u1").get<u32>();
            s.u2 = j.at("u2").get<u32>();
        } else if (s.kind == "mm") {
            s.j = j.at("j").get<int>();
            s.u11 = j.at("u11").get<u32>();
            s.us_pairs = j.at("us").get<std::vector<std::pair<u32, u32>>>();
            s.r_k = j.at("r_k").get<int>();
            s.r_bits = j.at("r_bits").get<std::vector<int>>();
        } else if (s.kind == "binomial") {
            s.i = j.at("i").get<int>();
        } else {
            throw std::invalid_argument("unknown construction kind: " + s.kind);
        }
    } catch (const ojson::exception& e) {
        throw std::invalid_argument(std::string("construction JSON: ") + e.what());
    }
    return s;
}

VectorialFunction build(const ConstructionSpec& s) {
    if (s.kind == "trace_perm") return trace_perm(s.e, s.h, tower_of(s)).F;
    if (s.kind == "niho_general")
        return niho_general(s.u1, s.us, switch_poly(s), tower_of(s));
    if (s.kind == "niho_k2") return niho_k2(s.u1, s.u2, tower_of(s));
    if (s.kind == "mm") {
        MMParams p{s.j, s.u11, s.us_pairs, switch_poly(s)};
        const u32 ms = s.modulus_small ? s.modulus_small : registry_modulus(s.m);
        return mm_construct(p, make_field(s.m, ms));
    }
    if (s.kind == "binomial") return binomial_pair(s.i, tower_of(s));
    throw std::invalid_argument("unknown construction kind: " + s.kind);
}

} // namespace bentcomp
