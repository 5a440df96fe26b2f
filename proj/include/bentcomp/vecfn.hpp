#pragma once
#include <string>
#include <vector>
#include "bentcomp/boolfn.hpp"

namespace bentcomp {

// F: V -> V given by a value table over the domain (codomain = domain).
class VectorialFunction {
public:
    VectorialFunction(Domain d, std::vector<u32> table, std::string desc = "");

    const Domain& domain() const { return d_; }
    u32 operator()(u32 x) const { return t_[x]; }
    const std::vector<u32>& table() const { return t_; }
    const std::string& desc() const { return desc_; }
    void set_desc(std::string s) { desc_ = std::move(s); }

private:
    Domain d_;
    std::vector<u32> t_;
    std::string desc_;
};

// Component F_a(x) = <a, F(x)> (trace pairing); a != 0.
TruthTable component(const VectorialFunction& F, u32 a);

// W_{F_a}(w), computed directly in O(2^N).
int walsh_value(const VectorialFunction& F, u32 a, u32 w);

// #{x : F(x+a) + F(x) = b}; a != 0.
u64 delta(const VectorialFunction& F, u32 a, u32 b);
// all delta(a, b) for fixed a, indexed by b (recomputed on demand; the full
// 2^N x 2^N table is never materialized)
std::vector<u32> delta_row(const VectorialFunction& F, u32 a);

} // namespace bentcomp
