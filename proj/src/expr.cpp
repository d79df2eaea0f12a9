#include "regulous/expr.hpp"

#include <algorithm>

namespace regulous {

namespace {

ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

void check_same(const ExprPtr& a, const ExprPtr& b) {
    if (a->vars != b->vars) throw ArityError("expression trees over different variables");
}

} // namespace

ExprPtr Expr::constant(std::vector<std::string> vars, const Rational& c) {
    Expr e;
    e.kind = Kind::Const;
    e.vars = std::move(vars);
    e.value = c;
    return make(std::move(e));
}

ExprPtr Expr::variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw ArityError("variable index out of range");
    Expr e;
    e.kind = Kind::Var;
    e.vars = std::move(vars);
    e.var_index = index;
    return make(std::move(e));
}

#define REGULOUS_BINARY(name, KIND)                                                               \
    ExprPtr Expr::name(ExprPtr a, ExprPtr b) {                                                    \
        check_same(a, b);                                                                         \
        Expr e;                                                                                   \
        e.kind = Kind::KIND;                                                                      \
        e.vars = a->vars;                                                                         \
        e.lhs = std::move(a);                                                                     \
        e.rhs = std::move(b);                                                                     \
        return make(std::move(e));                                                                \
    }

REGULOUS_BINARY(add, Add)
REGULOUS_BINARY(sub, Sub)
REGULOUS_BINARY(mul, Mul)
REGULOUS_BINARY(div, Div)
#undef REGULOUS_BINARY

ExprPtr Expr::neg(ExprPtr a) {
    Expr e;
    e.kind = Kind::Neg;
    e.vars = a->vars;
    e.lhs = std::move(a);
    return make(std::move(e));
}

ExprPtr Expr::pow(ExprPtr a, std::uint64_t exp) {
    Expr e;
    e.kind = Kind::Pow;
    e.vars = a->vars;
    e.exponent = exp;
    e.lhs = std::move(a);
    return make(std::move(e));
}

ExprPtr Expr::compose2(RatFun inner, ExprPtr arg0, ExprPtr arg1) {
    if (inner.nvars() != 2) throw ArityError("compose2: inner function must be bivariate");
    check_same(arg0, arg1);
    Expr e;
    e.kind = Kind::Compose2;
    e.vars = arg0->vars;
    e.inner = std::move(inner);
    e.args = {std::move(arg0), std::move(arg1)};
    return make(std::move(e));
}

ExprPtr expr_from_ast(const Ast& ast, const std::vector<std::string>& vars) {
    switch (ast.kind) {
    case Ast::Kind::Integer: return Expr::constant(vars, Rational(ast.value));
    case Ast::Kind::Var: {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == ast.name) return Expr::variable(vars, i);
        throw ParseError(0, "unknown variable '" + ast.name + "'");
    }
    case Ast::Kind::Add: return Expr::add(expr_from_ast(*ast.lhs, vars), expr_from_ast(*ast.rhs, vars));
    case Ast::Kind::Sub: return Expr::sub(expr_from_ast(*ast.lhs, vars), expr_from_ast(*ast.rhs, vars));
    case Ast::Kind::Mul: return Expr::mul(expr_from_ast(*ast.lhs, vars), expr_from_ast(*ast.rhs, vars));
    case Ast::Kind::Div: return Expr::div(expr_from_ast(*ast.lhs, vars), expr_from_ast(*ast.rhs, vars));
    case Ast::Kind::Neg: return Expr::neg(expr_from_ast(*ast.lhs, vars));
    case Ast::Kind::Pow: return Expr::pow(expr_from_ast(*ast.lhs, vars), ast.exponent);
    }
    throw Error("unreachable");
}

ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& vars) {
    return expr_from_ast(*parse_expression(text), vars);
}

RatFun expr_to_ratfun(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Const: return RatFun::constant(e.vars, e.value);
    case Expr::Kind::Var: return RatFun::from_poly(Poly::variable(e.vars, e.var_index));
    case Expr::Kind::Add: return expr_to_ratfun(*e.lhs) + expr_to_ratfun(*e.rhs);
    case Expr::Kind::Sub: return expr_to_ratfun(*e.lhs) - expr_to_ratfun(*e.rhs);
    case Expr::Kind::Mul: return expr_to_ratfun(*e.lhs) * expr_to_ratfun(*e.rhs);
    case Expr::Kind::Div: return expr_to_ratfun(*e.lhs) / expr_to_ratfun(*e.rhs);
    case Expr::Kind::Neg: return -expr_to_ratfun(*e.lhs);
    case Expr::Kind::Pow: return expr_to_ratfun(*e.lhs).pow(e.exponent);
    case Expr::Kind::Compose2:
        return e.inner.substitute({expr_to_ratfun(*e.args[0]), expr_to_ratfun(*e.args[1])});
    }
    throw Error("unreachable");
}

ExprPtr radical_generator(const std::vector<ExprPtr>& fs) {
    if (fs.empty()) throw Error("radical_generator: empty list");
    ExprPtr acc;
    for (const auto& f : fs) {
        ExprPtr sq = Expr::mul(f, f);
        acc = acc ? Expr::add(acc, sq) : sq;
    }
    return acc;
}

namespace {

std::vector<std::size_t> support_of(const RatFun& f) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < f.nvars(); ++v)
        if (f.num().involves(v) || f.den().involves(v)) s.push_back(v);
    return s;
}

// Project an n-variable function supported on <= 2 coordinates down to a
// bivariate function (formal variables of the original names).
RatFun project_to_pair(const RatFun& f, const std::vector<std::size_t>& support) {
    std::vector<std::string> vars2;
    for (std::size_t v : support) vars2.push_back(f.vars()[v]);
    while (vars2.size() < 2) vars2.push_back(vars2.empty() ? "x" : vars2[0] + "_");
    auto project = [&](const Poly& p) {
        Poly out(vars2);
        for (const auto& [m, c] : p.terms()) {
            Monomial mm(2);
            for (std::size_t i = 0; i < support.size(); ++i) mm.e[i] = m.e[support[i]];
            out.add_term(mm, c);
        }
        return out;
    };
    return RatFun(project(f.num()), project(f.den()));
}

// Lift a 2-variable witness arc back into the ambient space: support
// coordinates follow the planar arc, the rest stay at zero.
Arc lift_arc(const Arc& planar, const std::vector<std::size_t>& support, std::size_t n) {
    Arc out;
    std::vector<std::string> tvar{"t"};
    for (std::size_t i = 0; i < n; ++i) out.components.push_back(RatFun::constant(tvar, 0));
    for (std::size_t i = 0; i < support.size() && i < planar.components.size(); ++i)
        out.components[support[i]] = planar.components[i];
    return out;
}

Verdict lift_verdict(Verdict v, const std::vector<std::size_t>& support, std::size_t n) {
    if (v.arc_witness) {
        v.arc_witness->a = lift_arc(v.arc_witness->a, support, n);
        v.arc_witness->b = lift_arc(v.arc_witness->b, support, n);
    }
    if (v.infinite_witness) v.infinite_witness->a = lift_arc(v.infinite_witness->a, support, n);
    v.values.clear(); // point values live in the plane, not the ambient space
    return v;
}

Verdict certify_impl(const ExprPtr& e, int k, const Budget& budget);

// Certification of a node through its rational-function collapse: exact for
// polynomials, positive denominators and bivariate support.
std::optional<Verdict> certify_by_value(const RatFun& rf, int k, const Budget& budget) {
    Verdict v;
    v.k = k;
    if (rf.is_polynomial() || certified_positive(rf.den())) {
        v.tag = Verdict::Tag::Regulous;
        return v;
    }
    if (rf.nvars() == 2) {
        Verdict dec = decide_regulous2(rf, k, budget);
        if (dec.tag == Verdict::Tag::Unknown) return std::nullopt;
        return dec;
    }
    auto support = support_of(rf);
    if (support.size() <= 2) {
        RatFun planar = project_to_pair(rf, support);
        Verdict dec = decide_regulous2(planar, k, budget);
        if (dec.tag == Verdict::Tag::Unknown) return std::nullopt;
        return lift_verdict(std::move(dec), support, rf.nvars());
    }
    return std::nullopt;
}

Verdict certify_impl(const ExprPtr& e, int k, const Budget& budget) {
    RatFun rf = expr_to_ratfun(*e);
    if (auto v = certify_by_value(rf, k, budget)) return *v;

    // structural rules
    Verdict v;
    v.k = k;
    switch (e->kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul: {
        Verdict a = certify_impl(e->lhs, k, budget);
        if (a.tag == Verdict::Tag::Regulous) {
            Verdict b = certify_impl(e->rhs, k, budget);
            if (b.tag == Verdict::Tag::Regulous) {
                v.tag = Verdict::Tag::Regulous;
                return v;
            }
        }
        break;
    }
    case Expr::Kind::Neg: {
        Verdict a = certify_impl(e->lhs, k, budget);
        if (a.tag == Verdict::Tag::Regulous) return a;
        break;
    }
    case Expr::Kind::Pow: {
        Verdict a = certify_impl(e->lhs, k, budget);
        if (a.tag == Verdict::Tag::Regulous) return a;
        break;
    }
    case Expr::Kind::Div: {
        RatFun den = expr_to_ratfun(*e->rhs);
        bool nonvanishing = den.is_polynomial() && (certified_positive(den.num()) ||
                                                    certified_positive(-den.num()));
        if (nonvanishing) {
            Verdict a = certify_impl(e->lhs, k, budget);
            if (a.tag == Verdict::Tag::Regulous) {
                v.tag = Verdict::Tag::Regulous;
                return v;
            }
        }
        break;
    }
    case Expr::Kind::Compose2: {
        Verdict inner = decide_regulous2(e->inner, k, budget);
        if (inner.tag == Verdict::Tag::Regulous) {
            Verdict a = certify_impl(e->args[0], k, budget);
            Verdict b = certify_impl(e->args[1], k, budget);
            if (a.tag == Verdict::Tag::Regulous && b.tag == Verdict::Tag::Regulous) {
                v.tag = Verdict::Tag::Regulous;
                return v;
            }
        }
        break;
    }
    default: break;
    }
    v.tag = Verdict::Tag::Unknown;
    v.reason = "no compositional certificate applies";
    return v;
}

} // namespace

std::vector<Arc> default_battery_n(const std::vector<Rational>& base, std::size_t n,
                                   const Int& height) {
    if (n == 2) return default_battery2({base[0], base[1]}, height);
    std::vector<Arc> arcs;
    std::vector<std::string> tvar{"t"};
    Poly t = Poly::variable(tvar, 0);
    Poly one = Poly::constant(tvar, 1);

    // coordinate-pair planar batteries
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (const auto& planar : default_battery2({base[i], base[j]}, Int(1))) {
                Arc a;
                for (std::size_t v = 0; v < n; ++v)
                    a.components.push_back(RatFun::constant(tvar, base[v]));
                a.components[i] = planar.components[0];
                a.components[j] = planar.components[1];
                arcs.push_back(a);
            }
        }
    }
    // mixed-direction lines
    long h = static_cast<long>(height);
    std::vector<long> range;
    for (long d = -h; d <= h; ++d) range.push_back(d);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        bool all_zero = true;
        for (std::size_t v = 0; v < n; ++v) all_zero &= (range[idx[v]] == 0);
        if (!all_zero) {
            Arc a;
            for (std::size_t v = 0; v < n; ++v)
                a.components.push_back(
                    RatFun::from_poly(one * base[v] + t * Rational(range[idx[v]])));
            arcs.push_back(a);
        }
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == range.size()) idx[pos++] = 0;
        if (pos == n) break;
    }
    return arcs;
}

std::optional<RefutationWitness> refute_by_arcs_expr(const ExprPtr& e,
                                                     const std::vector<Arc>& battery) {
    return refute_by_arcs(expr_to_ratfun(*e), battery);
}

Verdict certify_regulous(const ExprPtr& e, int k, const Budget& budget) {
    Verdict v = certify_impl(e, k, budget);
    if (v.tag != Verdict::Tag::Unknown) return v;
    // sound refutation attempt before conceding
    RatFun rf = expr_to_ratfun(*e);
    std::vector<Rational> origin(rf.nvars(), Rational(0));
    auto w = refute_by_arcs(rf, default_battery_n(origin, rf.nvars(), Int(2)));
    if (w) {
        Verdict nr;
        nr.k = k;
        nr.tag = Verdict::Tag::NotRegulous;
        if (w->b) {
            WitnessArcs wa;
            wa.coeff_index = Monomial(rf.nvars());
            wa.a = w->a;
            wa.b = *w->b;
            wa.limit_a = w->limit_a;
            wa.limit_b = w->limit_b;
            wa.base = w->base;
            nr.arc_witness = wa;
        } else {
            WitnessInfiniteArc wi;
            wi.coeff_index = Monomial(rf.nvars());
            wi.a = w->a;
            wi.limit = w->limit_a;
            wi.base = w->base;
            nr.infinite_witness = wi;
        }
        return nr;
    }
    v.reason = "no compositional certificate applies; arc battery finds no witness";
    return v;
}

} // namespace regulous
