#include "bentcomp/vecfn.hpp"

#include <stdexcept>

namespace bentcomp {

VectorialFunction::VectorialFunction(Domain d, std::vector<u32> table, std::string desc)
    : d_(d), t_(std::move(table)), desc_(std::move(desc)) {
    if (t_.size() != d_.size())
        throw std::invalid_argument("value table does not fit the domain");
    for (u32 v : t_)
        if (v >= d_.size()) throw std::invalid_argument("value table entry out of range");
}

TruthTable component(const VectorialFunction& F, u32 a) {
    if (!a) throw std::invalid_argument("component index must be nonzero");
    u32 cf = F.domain().coord_form(a);
    TruthTable f(F.domain().dim());
    for (u32 x = 0; x < F.domain().size(); ++x) f.set(x, dot(cf, F(x)));
    return f;
}

int walsh_value(const VectorialFunction& F, u32 a, u32 w) {
    const Domain& d = F.domain();
    u32 ca = d.coord_form(a), cw = d.coord_form(w);
    int acc = 0;
    for (u32 x = 0; x < d.size(); ++x)
        acc += 1 - 2 * (dot(ca, F(x)) ^ dot(cw, x));
    return acc;
}

u64 delta(const VectorialFunction& F, u32 a, u32 b) {
    if (!a) throw std::invalid_argument("derivative direction must be nonzero");
    u64 c = 0;
    for (u32 x = 0; x < F.domain().size(); ++x)
        c += (F(x ^ a) ^ F(x)) == b;
    return c;
}

std::vector<u32> delta_row(const VectorialFunction& F, u32 a) {
    if (!a) throw std::invalid_argument("derivative direction must be nonzero");
    std::vector<u32> row(F.domain().size(), 0);
    for (u32 x = 0; x < F.domain().size(); ++x) ++row[F(x ^ a) ^ F(x)];
    return row;
}

} // namespace bentcomp
