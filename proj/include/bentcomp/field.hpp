#pragma once
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>
#include "bentcomp/bits.hpp"

namespace bentcomp {

// GF(2^k) in a polynomial basis, 2 <= k <= 20.  An element is a bitmask whose
// bit i is the coefficient of alpha^i, where alpha is the class of x modulo
// the reduction polynomial; the mask doubles as a truth-table index.
// Immutable after construction; concurrent reads are safe.
class Field {
public:
    static constexpr int kMinDegree = 2;
    static constexpr int kMaxDegree = 20;
    static constexpr int kTableDegree = 16; // log/antilog kept up to here

    Field(int degree, u32 modulus);

    int degree() const { return k_; }
    u32 modulus() const { return mod_; }
    u32 size() const { return u32(1) << k_; }
    u32 order() const { return size() - 1; }     // |GF(2^k)*|
    u32 generator() const { return gen_; }

    static u32 add(u32 a, u32 b) { return a ^ b; }

    u32 mul(u32 a, u32 b) const {
        if (!tables_) return slow_mul(a, b);
        if (!a || !b) return 0;
        u32 s = log_[a] + log_[b];
        if (s >= order()) s -= order();
        return alog_[s];
    }

    u32 sqr(u32 a) const { return mul(a, a); }
    u32 inv(u32 a) const;                  // throws std::invalid_argument on 0
    u32 pow(u32 a, i64 e) const;           // 0^0 = 1, 0^e = 0 for e > 0, throws for e < 0
    u32 frobenius(u32 a, int j) const;     // a^(2^j)
    u32 exp_g(u64 e) const;                // generator^e
    u32 log(u32 a) const;                  // discrete log base generator; throws on 0

    // absolute trace onto F_{2^d}: sum of a^(2^(d*i)); needs d | k
    u32 trace(u32 a, int d = 1) const;
    // relative trace for a already in F_{2^from}: sum_{i < from/to} a^(2^(to*i))
    u32 rel_trace(u32 a, int from, int to) const;
    // Tr_{2^k/2}(a) as a bit (trace is F_2-linear, so it is one mask dot)
    int trace_bit(u32 a) const { return dot(a, trmask_); }

    bool in_subfield(u32 a, int d) const { return frobenius(a, d) == a; }

    // c = coord_form(w) satisfies Tr(w*x) = parity(c & x) for all x
    u32 coord_form(u32 w) const {
        if (!cft_.empty()) return cft_[w];
        u32 c = 0;
        for (u32 t = w; t; t &= t - 1) c ^= cfb_[ctz(t)];
        return c;
    }

private:
    u32 slow_mul(u32 a, u32 b) const;

    int k_;
    u32 mod_;
    u32 gen_ = 0;
    u32 trmask_ = 0;
    bool tables_ = false;
    std::vector<u32> log_, alog_;
    std::vector<u32> cfb_; // coord_form on basis masks 1<<j
    std::vector<u32> cft_; // full coord_form table when k <= kTableDegree
};

// Polynomial basis 1, alpha, ..., alpha^(k-1) together with its trace-dual
// basis:  Tr(primal[i] * dual[j]) = (i == j).
struct DualBasis {
    std::vector<u32> primal;
    std::vector<u32> dual;
};
DualBasis dual_basis(const Field& f);

// --- default modulus registry -------------------------------------------
// Format of a registry file: lines "degree:modulus-hex", '#' comments.
u32 registry_modulus(int degree);
void load_registry_file(const std::string& path); // replaces matching defaults
const char* registry_env_var();                   // name of the path override

// Shared, cached field instances (keyed by degree and modulus).
std::shared_ptr<const Field> make_field(int degree);
std::shared_ptr<const Field> make_field(int degree, u32 modulus);

// --- quadratic extension tower  F_{2^m} < F_{2^n},  n = 2m ---------------
class Tower {
public:
    Tower(std::shared_ptr<const Field> big, std::shared_ptr<const Field> small);

    const Field& big() const { return *big_; }
    const Field& small() const { return *small_; }
    std::shared_ptr<const Field> big_ptr() const { return big_; }
    std::shared_ptr<const Field> small_ptr() const { return small_; }
    int m() const { return small_->degree(); }
    int n() const { return big_->degree(); }

    u32 embed(u32 a) const { return emb_[a]; }
    bool in_image(u32 A) const;
    u32 project(u32 A) const; // inverse of embed; throws if A is not in the image

private:
    std::shared_ptr<const Field> big_, small_;
    std::vector<u32> emb_;
    std::vector<u32> proj_;                 // used when n <= 16
    std::unordered_map<u32, u32> proj_map_; // used when n > 16
};

std::shared_ptr<const Tower> make_tower(int m);
std::shared_ptr<const Tower> make_tower(int m, u32 modulus_small, u32 modulus_big);

} // namespace bentcomp
