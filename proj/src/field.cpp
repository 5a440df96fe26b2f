#include "bentcomp/field.hpp"

#include <cassert>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bentcomp {

// ---- polynomial helpers over F_2 (masks, bit i = coeff of x^i) ----------

static int pdeg(u64 a) { return bitlen(a) - 1; }

static u64 pmulmod(u64 a, u64 b, u64 f) {
    int n = pdeg(f);
    u64 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> n & 1) a ^= f;
    }
    return r;
}

static u64 pgcd(u64 a, u64 b) {
    while (b) {
        int db = pdeg(b);
        while (pdeg(a) >= db) a ^= b << (pdeg(a) - db); // a mod b
        std::swap(a, b);
    }
    return a;
}

static bool poly_irreducible(u64 f) {
    int n = pdeg(f);
    if (n < 1 || !(f & 1)) return false;
    // f is squarefree with no factor of degree <= n/2  iff
    // gcd(x^(2^j) - x, f) = 1 for j = 1..n/2
    u64 xp = 2; // the class of x
    for (int j = 1; j <= n / 2; ++j) {
        xp = pmulmod(xp, xp, f);
        if (pgcd(xp ^ 2u, f) != 1) return false;
    }
    return true;
}

static std::vector<u32> prime_factors(u32 v) {
    std::vector<u32> fs;
    for (u32 d = 2; u64(d) * d <= v; ++d)
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) fs.push_back(v);
    return fs;
}

// ---- Field ----------------------------------------------------------------

u32 Field::slow_mul(u32 a, u32 b) const {
    u32 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> k_ & 1) a ^= mod_;
    }
    return r;
}

static u32 slow_pow_in(const Field& f, u32 a, u64 e) {
    u32 r = 1;
    while (e) {
        if (e & 1) r = f.mul(r, a);
        a = f.mul(a, a);
        e >>= 1;
    }
    return r;
}

Field::Field(int degree, u32 modulus) : k_(degree), mod_(modulus) {
    if (k_ < kMinDegree || k_ > kMaxDegree)
        throw std::invalid_argument("field degree out of range [2,20]");
    if (bitlen(mod_) != k_ + 1)
        throw std::invalid_argument("modulus degree does not match field degree");
    if (!poly_irreducible(mod_))
        throw std::invalid_argument("modulus is reducible");

    // find the smallest generator of the multiplicative group
    auto qs = prime_factors(order());
    for (u32 g = 2; g < size(); ++g) {
        bool ok = true;
        for (u32 q : qs)
            if (slow_pow_in(*this, g, order() / q) == 1) { ok = false; break; }
        if (ok) { gen_ = g; break; }
    }
    if (!gen_) throw std::logic_error("no generator found"); // cannot happen

    if (k_ <= kTableDegree) {
        alog_.resize(order());
        log_.assign(size(), 0);
        u32 v = 1;
        for (u32 i = 0; i < order(); ++i) {
            alog_[i] = v;
            log_[v] = i;
            v = slow_mul(v, gen_);
        }
        if (v != 1) throw std::logic_error("generator order check failed");
        tables_ = true;
    }

    // Tr(alpha^s) for s <= 2k-2, then the trace mask and the coord forms
    std::vector<u32> trp(2 * k_ - 1);
    for (int s = 0; s <= 2 * k_ - 2; ++s) {
        u32 as = slow_pow_in(*this, 2, s);
        u32 t = 0, c = as;
        for (int j = 0; j < k_; ++j) {
            t ^= c;
            c = slow_mul(c, c);
        }
        if (t > 1) throw std::logic_error("trace left the prime field");
        trp[s] = t;
    }
    for (int i = 0; i < k_; ++i) trmask_ |= trp[i] << i;
    cfb_.resize(k_);
    for (int j = 0; j < k_; ++j) {
        u32 c = 0;
        for (int i = 0; i < k_; ++i) c |= trp[i + j] << i;
        cfb_[j] = c;
    }
    if (k_ <= kTableDegree) {
        cft_.resize(size());
        cft_[0] = 0;
        for (u32 w = 1; w < size(); ++w)
            cft_[w] = cft_[w & (w - 1)] ^ cfb_[ctz(w)];
    }
}

u32 Field::inv(u32 a) const {
    if (!a) throw std::invalid_argument("inverse of 0");
    if (tables_) {
        u32 l = log_[a];
        return alog_[l ? order() - l : 0];
    }
    return slow_pow_in(*this, a, order() - 1);
}

u32 Field::pow(u32 a, i64 e) const {
    if (!a) {
        if (e == 0) return 1;
        if (e > 0) return 0;
        throw std::invalid_argument("0 raised to a negative power");
    }
    u32 em = u32(((e % order()) + order()) % order());
    if (tables_) return alog_[u64(log_[a]) * em % order()];
    return slow_pow_in(*this, a, em);
}

u32 Field::frobenius(u32 a, int j) const {
    j %= k_;
    if (j < 0) j += k_;
    for (int i = 0; i < j; ++i) a = mul(a, a);
    return a;
}

u32 Field::exp_g(u64 e) const {
    e %= order();
    if (tables_) return alog_[e];
    return slow_pow_in(*this, gen_, e);
}

u32 Field::log(u32 a) const {
    if (!a) throw std::invalid_argument("log of 0");
    if (!tables_) throw std::runtime_error("no log table for degree > 16");
    return log_[a];
}

u32 Field::trace(u32 a, int d) const {
    if (d < 1 || k_ % d != 0)
        throw std::invalid_argument("trace target degree must divide the field degree");
    u32 r = 0, t = a;
    for (int i = 0; i < k_ / d; ++i) {
        r ^= t;
        t = frobenius(t, d);
    }
    return r;
}

u32 Field::rel_trace(u32 a, int from, int to) const {
    if (to < 1 || from % to != 0 || k_ % from != 0)
        throw std::invalid_argument("bad relative trace degrees");
    if (!in_subfield(a, from))
        throw std::invalid_argument("element is not in the stated subfield");
    u32 r = 0, t = a;
    for (int i = 0; i < from / to; ++i) {
        r ^= t;
        t = frobenius(t, to);
    }
    return r;
}

// ---- dual basis ------------------------------------------------------------

DualBasis dual_basis(const Field& f) {
    int k = f.degree();
    // Gram matrix G[i] bit j = Tr(alpha^i * alpha^j), inverted by Gauss-Jordan
    std::vector<u32> g(k), inv(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            g[i] |= u32(f.trace_bit(f.mul(u32(1) << i, u32(1) << j))) << j;
        inv[i] = u32(1) << i;
    }
    for (int c = 0; c < k; ++c) {
        int p = -1;
        for (int r = c; r < k; ++r)
            if (g[r] >> c & 1) { p = r; break; }
        if (p < 0) throw std::logic_error("trace form is degenerate"); // cannot happen
        std::swap(g[c], g[p]);
        std::swap(inv[c], inv[p]);
        for (int r = 0; r < k; ++r)
            if (r != c && (g[r] >> c & 1)) {
                g[r] ^= g[c];
                inv[r] ^= inv[c];
            }
    }
    DualBasis db;
    db.primal.resize(k);
    db.dual.resize(k);
    for (int i = 0; i < k; ++i) db.primal[i] = u32(1) << i;
    for (int j = 0; j < k; ++j) {
        u32 mask = 0;
        for (int i = 0; i < k; ++i) mask |= (inv[i] >> j & 1) << i;
        db.dual[j] = mask;
    }
    return db;
}

// ---- registry and field cache ----------------------------------------------

namespace {

struct Registry {
    std::unordered_map<int, u32> mods;
    Registry() {
        static const u32 kDefault[] = {
            0,        0,        0x7,      0xB,      0x13,    0x25,    0x5B,
            0x83,     0x11D,    0x211,    0x46F,    0x805,   0x10EB,  0x201B,
            0x40A9,   0x8035,   0x1002D,  0x20009,  0x41403, 0x80027, 0x1006F3,
        };
        for (int d = 2; d <= 20; ++d) mods[d] = kDefault[d];
    }
};

std::mutex reg_mtx;
Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

const char* registry_env_var() { return "BENTCOMP_REGISTRY"; }

void load_registry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry file: " + path);
    std::unordered_map<int, u32> parsed;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected degree:modulus-hex");
        int deg = std::stoi(tok.substr(0, colon));
        u32 mod = u32(std::stoul(tok.substr(colon + 1), nullptr, 16));
        if (deg < Field::kMinDegree || deg > Field::kMaxDegree)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": degree out of range");
        parsed[deg] = mod;
    }
    std::lock_guard<std::mutex> lk(reg_mtx);
    for (auto [d, m] : parsed) registry().mods[d] = m;
}

u32 registry_modulus(int degree) {
    std::lock_guard<std::mutex> lk(reg_mtx);
    auto& mods = registry().mods;
    auto it = mods.find(degree);
    if (it == mods.end())
        throw std::invalid_argument("no registry modulus for degree " +
                                    std::to_string(degree));
    return it->second;
}

std::shared_ptr<const Field> make_field(int degree, u32 modulus) {
    static std::mutex mtx;
    static std::unordered_map<u64, std::shared_ptr<const Field>> cache;
    u64 key = (u64(degree) << 32) | modulus;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(degree, modulus);
    cache[key] = f;
    return f;
}

std::shared_ptr<const Field> make_field(int degree) {
    return make_field(degree, registry_modulus(degree));
}

// ---- tower ------------------------------------------------------------------

Tower::Tower(std::shared_ptr<const Field> big, std::shared_ptr<const Field> small)
    : big_(std::move(big)), small_(std::move(small)) {
    int m = small_->degree(), n = big_->degree();
    if (n != 2 * m) throw std::invalid_argument("tower needs n = 2m");

    // minimal polynomial of the small generator: prod over conjugates g^(2^i)
    const Field& S = *small_;
    std::vector<u32> mp(m + 1, 0);
    mp[0] = 1;
    u32 conj = S.generator();
    for (int i = 0; i < m; ++i) {
        for (int t = m; t >= 1; --t) mp[t] = mp[t - 1] ^ S.mul(mp[t], conj);
        mp[0] = S.mul(mp[0], conj);
        conj = S.sqr(conj);
    }
    for (auto c : mp)
        if (c > 1) throw std::logic_error("minimal polynomial has a bad coefficient");

    // the image of the small generator is delta^s for delta of order 2^m-1;
    // pick the first s whose image is a root of the minimal polynomial
    const Field& B = *big_;
    u64 ordn = B.order(), ordm = S.order();
    u64 delta_exp = ordn / ordm;
    u32 beta = 0;
    for (u64 s = 1; s <= ordm; ++s) {
        u32 cand = B.exp_g(delta_exp * s % ordn);
        u32 acc = 0;
        for (int t = m; t >= 0; --t) {
            acc = B.mul(acc, cand);
            if (mp[t]) acc ^= 1;
        }
        if (acc == 0) { beta = cand; break; }
    }
    if (!beta) throw std::logic_error("no embedding root found"); // cannot happen
    if (!B.in_subfield(beta, m)) throw std::logic_error("embedding image left the subfield");

    emb_.assign(S.size(), 0);
    u32 acc = 1;
    for (u64 j = 0; j < ordm; ++j) {
        emb_[S.exp_g(j)] = acc;
        acc = B.mul(acc, beta);
    }
    if (acc != 1) throw std::logic_error("embedding image has wrong order");

    if (n <= 16) {
        proj_.assign(B.size(), 0xFFFFFFFFu);
        for (u32 a = 0; a < S.size(); ++a) proj_[emb_[a]] = a;
    } else {
        for (u32 a = 0; a < S.size(); ++a) proj_map_[emb_[a]] = a;
    }
}

bool Tower::in_image(u32 A) const {
    if (!proj_.empty()) return proj_[A] != 0xFFFFFFFFu;
    return proj_map_.count(A) != 0;
}

u32 Tower::project(u32 A) const {
    if (!proj_.empty()) {
        u32 v = proj_[A];
        if (v == 0xFFFFFFFFu)
            throw std::invalid_argument("element is not in the embedded subfield");
        return v;
    }
    auto it = proj_map_.find(A);
    if (it == proj_map_.end())
        throw std::invalid_argument("element is not in the embedded subfield");
    return it->second;
}

std::shared_ptr<const Tower> make_tower(int m, u32 modulus_small, u32 modulus_big) {
    return std::make_shared<const Tower>(make_field(2 * m, modulus_big),
                                         make_field(m, modulus_small));
}

std::shared_ptr<const Tower> make_tower(int m) {
    return make_tower(m, registry_modulus(m), registry_modulus(2 * m));
}

} // namespace bentcomp
