#include "bentcomp/domain.hpp"

#include <stdexcept>

namespace bentcomp {

Domain Domain::over_field(std::shared_ptr<const Field> f) {
    Domain d;
    d.n_ = f->degree();
    d.field_ = std::move(f);
    if (d.n_ % 2 == 0 && d.n_ >= 4) {
        int m = d.n_ / 2;
        d.tower_ = make_tower(m, registry_modulus(m), d.field_->modulus());
        d.half_ = d.tower_->small_ptr();
    }
    return d;
}

Domain Domain::over_field(std::shared_ptr<const Tower> t) {
    Domain d;
    d.n_ = t->n();
    d.field_ = t->big_ptr();
    d.half_ = t->small_ptr();
    d.tower_ = std::move(t);
    return d;
}

Domain Domain::over_product(std::shared_ptr<const Field> half) {
    Domain d;
    d.product_ = true;
    d.n_ = 2 * half->degree();
    d.half_ = std::move(half);
    return d;
}

const Field& Domain::whole_field() const {
    if (product_) throw std::logic_error("product domain has no whole-field view");
    return *field_;
}

const Field& Domain::half_field() const {
    if (!half_) throw std::logic_error("odd-degree field domain has no half field");
    return *half_;
}

int Domain::m_half() const {
    if (!half_) throw std::logic_error("domain has no half dimension");
    return half_->degree();
}

bool Domain::in_canonical_subfield(u32 v) const {
    if (product_) return hi(v) == 0;
    if (!tower_) throw std::logic_error("odd-degree field domain has no subfield");
    return tower_->in_image(v);
}

} // namespace bentcomp
