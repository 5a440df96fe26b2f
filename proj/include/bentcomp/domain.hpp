#pragma once
#include <memory>
#include <vector>
#include "bentcomp/field.hpp"

namespace bentcomp {

// Input space of a Boolean or vectorial function: either the field GF(2^N)
// itself, or the product F_{2^m} x F_{2^m} with pairs packed as (y << m) | z.
// In both cases points are plain masks in [0, 2^N), and the inner product
// <w,x> (a trace form, or a sum of two trace forms) reduces to one bit dot:
// <w,x> = parity(coord_form(w) & x).
class Domain {
public:
    static Domain over_field(std::shared_ptr<const Field> f);
    static Domain over_field(std::shared_ptr<const Tower> t); // big field + its tower
    static Domain over_product(std::shared_ptr<const Field> half);

    bool is_product() const { return product_; }
    int dim() const { return n_; }
    u32 size() const { return u32(1) << n_; }

    const Field& whole_field() const;  // field domains only
    const Field& half_field() const;   // product factor, or the tower subfield
    const Tower* tower() const { return tower_.get(); }
    std::shared_ptr<const Field> whole_field_ptr() const { return field_; }
    std::shared_ptr<const Field> half_field_ptr() const { return half_; }

    u32 coord_form(u32 w) const {
        if (!product_) return field_->coord_form(w);
        int m = half_->degree();
        u32 mask = (u32(1) << m) - 1;
        return (half_->coord_form(w >> m) << m) | half_->coord_form(w & mask);
    }
    int inner_bit(u32 w, u32 x) const { return dot(coord_form(w), x); }

    // product packing
    int m_half() const;
    u32 pack(u32 y, u32 z) const { return (y << m_half()) | z; }
    u32 hi(u32 v) const { return v >> m_half(); }
    u32 lo(u32 v) const { return v & ((u32(1) << m_half()) - 1); }

    // The canonical "expected non-bent" subspace: the embedded subfield
    // F_{2^m} of a quadratic extension, or {0} x F_{2^m} on a product.
    bool has_canonical_subfield() const { return product_ || tower_ != nullptr; }
    bool in_canonical_subfield(u32 v) const;

    bool same_as(const Domain& o) const {
        return product_ == o.product_ && field_ == o.field_ && half_ == o.half_;
    }

private:
    Domain() = default;
    bool product_ = false;
    int n_ = 0;
    std::shared_ptr<const Field> field_; // whole field (field domains)
    std::shared_ptr<const Field> half_;  // factor / subfield
    std::shared_ptr<const Tower> tower_; // set for field domains of even degree
};

} // namespace bentcomp
