#pragma once
#include <map>
#include <memory>
#include <string>

#include "bentcomp/vecfn.hpp"

namespace bentcomp {

// Immutable AST for the function language (see docs/expr_grammar.md).
// Exponents are folded to integers at parse time; constants are coordinate
// masks in the evaluation field (the whole field, or the product factor).
struct Expr {
    enum Kind { kVar, kConst, kAdd, kMul, kPow, kTrace, kFrob, kPair };
    Kind kind = kConst;
    std::string var;   // kVar: "x" on a field domain, "y"/"z" on a product
    u32 value = 0;     // kConst
    i64 exponent = 0;  // kPow
    int from_deg = 0;  // kTrace: source subfield degree
    int to_deg = 0;    // kTrace: target subfield degree
    int frob_j = 0;    // kFrob: number of squarings (mod degree at evaluation)
    std::shared_ptr<const Expr> a, b;
};
using ExprPtr = std::shared_ptr<const Expr>;

bool expr_equal(const Expr& x, const Expr& y);

// Canonical text form; parse(pretty(parse(s))) == parse(s).
std::string pretty(const Expr& e);

// Parse src against a domain. In exponent position the identifiers n (total
// dimension) and m (half dimension, when the domain has one) are available
// and folded to integers; `bindings` supplies named constants as coordinate
// masks in the evaluation field. Pairs `left, right` are allowed only at the
// top level. Errors report the source position.
ExprPtr parse_expr(const std::string& src, const Domain& d,
                   const std::map<std::string, u32>& bindings = {});

// Value table over the domain. Field domains take any field-valued tree;
// product domains require a root pair. Negative exponents reject inputs that
// would invert zero.
VectorialFunction compile(const ExprPtr& e, const Domain& d, std::string desc = "");
VectorialFunction compile(const std::string& src, const Domain& d,
                          const std::map<std::string, u32>& bindings = {});

// Boolean-valued compile: every evaluated value must be 0 or 1 (wrap the
// expression in Tr[k/1](...) if it is not).
TruthTable compile_bool(const ExprPtr& e, const Domain& d);
TruthTable compile_bool(const std::string& src, const Domain& d,
                        const std::map<std::string, u32>& bindings = {});

} // namespace bentcomp
