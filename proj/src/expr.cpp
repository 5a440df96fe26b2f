#include "bentcomp/expr.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace bentcomp {

namespace {

ExprPtr leaf(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr make_var(std::string name) {
    Expr e;
    e.kind = Expr::kVar;
    e.var = std::move(name);
    return leaf(std::move(e));
}

ExprPtr make_const(u32 v) {
    Expr e;
    e.kind = Expr::kConst;
    e.value = v;
    return leaf(std::move(e));
}

ExprPtr make_bin(Expr::Kind k, ExprPtr a, ExprPtr b) {
    Expr e;
    e.kind = k;
    e.a = std::move(a);
    e.b = std::move(b);
    return leaf(std::move(e));
}

constexpr i64 kExpLimit = i64(1) << 62;

i64 checked(__int128 v, const char* what) {
    if (v > kExpLimit || v < -kExpLimit)
        throw std::invalid_argument(std::string("exponent overflow in ") + what);
    return i64(v);
}

// ---------------------------------------------------------------- parser

struct Parser {
    const std::string& s;
    const Domain& dom;
    const Field& F; // evaluation field (whole field, or the product factor)
    const std::map<std::string, u32>& binds;
    size_t i = 0;
    int amb_n, amb_m; // -1 when the domain has no half dimension

    Parser(const std::string& src, const Domain& d, const std::map<std::string, u32>& b)
        : s(src),
          dom(d),
          F(d.is_product() ? d.half_field() : d.whole_field()),
          binds(b) {
        amb_n = d.dim();
        amb_m = d.dim() % 2 == 0 ? d.dim() / 2 : -1;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(i) +
                                    ": " + msg);
    }
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool at_alpha() {
        skip();
        return i < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_');
    }

    std::string ident() {
        skip();
        size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }

    u64 number() { // decimal, or hex with an 0x prefix
        skip();
        u64 v = 0;
        if (i + 1 < s.size() && s[i] == '0' && (s[i + 1] == 'x' || s[i + 1] == 'X')) {
            i += 2;
            size_t start = i;
            while (i < s.size() && std::isxdigit(static_cast<unsigned char>(s[i]))) {
                if (v >> 60) fail("numeric literal too large");
                v = v << 4 | u64(std::isdigit(static_cast<unsigned char>(s[i]))
                                     ? s[i] - '0'
                                     : std::tolower(s[i]) - 'a' + 10);
                ++i;
            }
            if (i == start) fail("expected hex digits after 0x");
            return v;
        }
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (v > (u64(1) << 60)) fail("numeric literal too large");
            v = v * 10 + u64(s[i] - '0');
            ++i;
        }
        if (i == start) fail("expected a number");
        return v;
    }

    // ---- integer (exponent) grammar: +, -, *, right-associative ^, m, n
    i64 exp_expr() {
        i64 v = exp_term();
        for (;;) {
            if (eat('+'))
                v = checked(__int128(v) + exp_term(), "'+'");
            else if (eat('-'))
                v = checked(__int128(v) - exp_term(), "'-'");
            else
                return v;
        }
    }
    i64 exp_term() {
        i64 v = exp_factor();
        while (eat('*')) v = checked(__int128(v) * exp_factor(), "'*'");
        return v;
    }
    i64 exp_factor() {
        if (eat('-')) return checked(-__int128(exp_factor()), "negation");
        i64 v = exp_atom();
        if (eat('^')) {
            i64 e = exp_factor();
            if (e < 0) fail("negative exponent inside an exponent");
            __int128 r = 1;
            for (i64 t = 0; t < e; ++t) {
                r *= v;
                checked(r, "'^'");
                if (r == 0) break;
            }
            v = i64(r);
        }
        return v;
    }
    i64 exp_atom() {
        skip();
        if (eat('(')) {
            i64 v = exp_expr();
            expect(')');
            return v;
        }
        if (at_digit()) return i64(number());
        if (at_alpha()) {
            std::string id = ident();
            if (id == "n") return amb_n;
            if (id == "m") {
                if (amb_m < 0) fail("this domain has no half dimension m");
                return amb_m;
            }
            fail("only integers, m, and n may appear in exponents (got '" + id + "')");
        }
        fail("expected an exponent");
    }

    // ---- value grammar
    ExprPtr v_expr() {
        ExprPtr v = v_term();
        while (eat('+')) v = make_bin(Expr::kAdd, v, v_term());
        return v;
    }
    ExprPtr v_term() {
        ExprPtr v = v_factor();
        while (eat('*')) v = make_bin(Expr::kMul, v, v_factor());
        return v;
    }
    ExprPtr v_factor() {
        ExprPtr p = v_primary();
        if (eat('^')) {
            i64 e = pow_suffix();
            if (p->kind == Expr::kConst) return make_const(F.pow(p->value, e));
            Expr n;
            n.kind = Expr::kPow;
            n.exponent = e;
            n.a = std::move(p);
            return leaf(std::move(n));
        }
        return p;
    }
    i64 pow_suffix() { // after '^': [-] (number | m | n | parenthesized integer expr)
        bool neg = eat('-');
        i64 v;
        if (eat('(')) {
            v = exp_expr();
            expect(')');
        } else if (at_digit()) {
            v = i64(number());
        } else if (at_alpha()) {
            std::string id = ident();
            if (id == "n")
                v = amb_n;
            else if (id == "m") {
                if (amb_m < 0) fail("this domain has no half dimension m");
                v = amb_m;
            } else
                fail("only integers, m, and n may appear in exponents (got '" + id + "')");
        } else {
            fail("expected an exponent");
        }
        return neg ? -v : v;
    }

    ExprPtr v_primary() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            ExprPtr a = v_expr();
            if (eat(',')) {
                ExprPtr b = v_expr();
                expect(')');
                return make_bin(Expr::kPair, a, b);
            }
            expect(')');
            return a;
        }
        if (at_digit()) {
            u64 v = number();
            if (v >= F.size()) fail("constant does not fit in the field");
            return make_const(u32(v));
        }
        if (!at_alpha()) fail("unexpected character");
        size_t at = i;
        std::string id = ident();
        if (id == "Tr") return parse_trace();
        if (id == "Frob") return parse_frob();
        if (id == "x" || id == "y" || id == "z") {
            bool ok = dom.is_product() ? (id == "y" || id == "z") : id == "x";
            if (!ok) {
                i = at;
                fail("variable '" + id + "' does not exist on this domain");
            }
            return make_var(id);
        }
        if (id == "g") return make_const(F.generator());
        if (id == "m" || id == "n") {
            i = at;
            fail("'" + id + "' is only meaningful in exponents");
        }
        auto it = binds.find(id);
        if (it != binds.end()) return make_const(it->second);
        i = at;
        fail("unbound identifier '" + id + "'");
    }

    ExprPtr parse_trace() {
        expect('[');
        i64 from = exp_expr();
        expect('/');
        i64 to = exp_expr();
        expect(']');
        if (from < 1 || from > F.degree() || F.degree() % from != 0)
            fail("trace source degree must divide the field degree");
        if (to < 1 || from % to != 0) fail("trace target degree must divide the source");
        expect('(');
        ExprPtr a = v_expr();
        expect(')');
        Expr e;
        e.kind = Expr::kTrace;
        e.from_deg = int(from);
        e.to_deg = int(to);
        e.a = std::move(a);
        return leaf(std::move(e));
    }

    ExprPtr parse_frob() {
        expect('[');
        i64 j = exp_expr();
        expect(']');
        if (j < -1000000 || j > 1000000) fail("Frobenius iterate out of range");
        expect('(');
        ExprPtr a = v_expr();
        expect(')');
        Expr e;
        e.kind = Expr::kFrob;
        e.frob_j = int(j);
        e.a = std::move(a);
        return leaf(std::move(e));
    }
};

void forbid_nested_pairs(const Expr& e, bool root) {
    if (e.kind == Expr::kPair && !root)
        throw std::invalid_argument("a pair is only allowed at the top level");
    if (e.a) forbid_nested_pairs(*e.a, false);
    if (e.b) forbid_nested_pairs(*e.b, false);
}

// ---------------------------------------------------------------- evaluator

const Field& eval_field(const Domain& d) {
    return d.is_product() ? d.half_field() : d.whole_field();
}

void validate_tree(const Expr& e, const Domain& d) {
    const Field& F = eval_field(d);
    switch (e.kind) {
        case Expr::kVar: {
            bool ok = d.is_product() ? (e.var == "y" || e.var == "z") : e.var == "x";
            if (!ok)
                throw std::invalid_argument("variable '" + e.var +
                                            "' does not exist on this domain");
            break;
        }
        case Expr::kConst:
            if (e.value >= F.size())
                throw std::invalid_argument("constant does not fit in the field");
            break;
        case Expr::kTrace:
            if (e.from_deg < 1 || F.degree() % e.from_deg != 0 || e.to_deg < 1 ||
                e.from_deg % e.to_deg != 0)
                throw std::invalid_argument("trace degrees do not divide");
            break;
        default:
            break;
    }
    if (e.a) validate_tree(*e.a, d);
    if (e.b) validate_tree(*e.b, d);
}

struct Eval {
    const Field& F;
    u32 x = 0, y = 0, z = 0;
    bool product = false;

    u32 run(const Expr& e) const {
        switch (e.kind) {
            case Expr::kVar:
                if (product) return e.var == "y" ? y : z;
                return x;
            case Expr::kConst:
                return e.value;
            case Expr::kAdd:
                return run(*e.a) ^ run(*e.b);
            case Expr::kMul:
                return F.mul(run(*e.a), run(*e.b));
            case Expr::kPow:
                return F.pow(run(*e.a), e.exponent);
            case Expr::kTrace: {
                u32 v = run(*e.a);
                if (e.from_deg == F.degree()) return F.trace(v, e.to_deg);
                return F.rel_trace(v, e.from_deg, e.to_deg);
            }
            case Expr::kFrob: {
                int k = F.degree();
                return F.frobenius(run(*e.a), (e.frob_j % k + k) % k);
            }
            case Expr::kPair:
                break;
        }
        throw std::logic_error("pair evaluated as a value");
    }
};

// ---------------------------------------------------------------- printer

int level(const Expr& e) {
    switch (e.kind) {
        case Expr::kAdd: return 1;
        case Expr::kMul: return 2;
        case Expr::kPow: return 3;
        default: return 4;
    }
}

void pp(const Expr& e, int need, std::string& out) {
    bool wrap = level(e) < need;
    if (wrap) out += '(';
    switch (e.kind) {
        case Expr::kVar:
            out += e.var;
            break;
        case Expr::kConst: {
            char buf[16];
            std::snprintf(buf, sizeof buf, "0x%x", e.value);
            out += buf;
            break;
        }
        case Expr::kAdd:
            pp(*e.a, 1, out);
            out += " + ";
            pp(*e.b, 2, out);
            break;
        case Expr::kMul:
            pp(*e.a, 2, out);
            out += '*';
            pp(*e.b, 3, out);
            break;
        case Expr::kPow:
            pp(*e.a, 4, out);
            out += '^';
            out += std::to_string(e.exponent);
            break;
        case Expr::kTrace:
            out += "Tr[" + std::to_string(e.from_deg) + "/" + std::to_string(e.to_deg) + "](";
            pp(*e.a, 1, out);
            out += ')';
            break;
        case Expr::kFrob:
            out += "Frob[" + std::to_string(e.frob_j) + "](";
            pp(*e.a, 1, out);
            out += ')';
            break;
        case Expr::kPair:
            out += '(';
            pp(*e.a, 1, out);
            out += ", ";
            pp(*e.b, 1, out);
            out += ')';
            break;
    }
    if (wrap) out += ')';
}

const char* kReserved[] = {"x", "y", "z", "g", "m", "n", "Tr", "Frob"};

} // namespace

bool expr_equal(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::kVar: return x.var == y.var;
        case Expr::kConst: return x.value == y.value;
        case Expr::kPow:
            if (x.exponent != y.exponent) return false;
            break;
        case Expr::kTrace:
            if (x.from_deg != y.from_deg || x.to_deg != y.to_deg) return false;
            break;
        case Expr::kFrob:
            if (x.frob_j != y.frob_j) return false;
            break;
        default: break;
    }
    if (bool(x.a) != bool(y.a) || bool(x.b) != bool(y.b)) return false;
    if (x.a && !expr_equal(*x.a, *y.a)) return false;
    if (x.b && !expr_equal(*x.b, *y.b)) return false;
    return true;
}

std::string pretty(const Expr& e) {
    std::string out;
    pp(e, 0, out);
    return out;
}

ExprPtr parse_expr(const std::string& src, const Domain& d,
                   const std::map<std::string, u32>& bindings) {
    const Field& F = d.is_product() ? d.half_field() : d.whole_field();
    for (const auto& [name, value] : bindings) {
        for (const char* r : kReserved)
            if (name == r)
                throw std::invalid_argument("binding '" + name + "' shadows a reserved name");
        if (name.empty() || value >= F.size())
            throw std::invalid_argument("binding '" + name + "' does not fit in the field");
    }
    Parser p(src, d, bindings);
    ExprPtr r = p.v_expr();
    if (p.eat(',')) r = make_bin(Expr::kPair, r, p.v_expr()); // bare top-level pair
    p.skip();
    if (p.i != src.size()) p.fail("trailing input");
    forbid_nested_pairs(*r, true);
    return r;
}

VectorialFunction compile(const ExprPtr& e, const Domain& d, std::string desc) {
    forbid_nested_pairs(*e, true);
    validate_tree(*e, d);
    const Field& F = eval_field(d);
    std::vector<u32> table(d.size());
    if (d.is_product()) {
        if (e->kind != Expr::kPair)
            throw std::invalid_argument("a product codomain needs a top-level pair (left, right)");
        Eval ev{F, 0, 0, 0, true};
        for (u32 v = 0; v < d.size(); ++v) {
            ev.y = d.hi(v);
            ev.z = d.lo(v);
            table[v] = d.pack(ev.run(*e->a), ev.run(*e->b));
        }
    } else {
        if (e->kind == Expr::kPair)
            throw std::invalid_argument("pair output requires a product domain");
        Eval ev{F, 0, 0, 0, false};
        for (u32 v = 0; v < d.size(); ++v) {
            ev.x = v;
            table[v] = ev.run(*e);
        }
    }
    return VectorialFunction(d, std::move(table), desc.empty() ? pretty(*e) : std::move(desc));
}

VectorialFunction compile(const std::string& src, const Domain& d,
                          const std::map<std::string, u32>& bindings) {
    return compile(parse_expr(src, d, bindings), d, src);
}

TruthTable compile_bool(const ExprPtr& e, const Domain& d) {
    if (e->kind == Expr::kPair)
        throw std::invalid_argument("a Boolean function cannot be a pair");
    forbid_nested_pairs(*e, true);
    validate_tree(*e, d);
    const Field& F = eval_field(d);
    Eval ev{F, 0, 0, 0, d.is_product()};
    TruthTable t(d.dim());
    for (u32 v = 0; v < d.size(); ++v) {
        if (d.is_product()) {
            ev.y = d.hi(v);
            ev.z = d.lo(v);
        } else {
            ev.x = v;
        }
        u32 r = ev.run(*e);
        if (r > 1)
            throw std::invalid_argument(
                "Boolean compile produced a value outside {0,1}; wrap the "
                "expression in Tr[k/1](...)");
        t.set(v, int(r));
    }
    return t;
}

TruthTable compile_bool(const std::string& src, const Domain& d,
                        const std::map<std::string, u32>& bindings) {
    return compile_bool(parse_expr(src, d, bindings), d);
}

} // namespace bentcomp
