#include "regulous/arc.hpp"

#include "regulous/parser.hpp"

#include <sstream>

namespace regulous {

std::string ExtValue::to_string() const {
    switch (tag) {
    case Tag::Finite: return regulous::to_string(value);
    case Tag::PlusInfinity: return "+inf";
    case Tag::MinusInfinity: return "-inf";
    case Tag::IndeterminateTwoSided: return "indeterminate";
    }
    return "?";
}

std::optional<std::vector<Rational>> Arc::base_point() const {
    std::vector<Rational> p;
    p.reserve(components.size());
    std::vector<Rational> zero{Rational(0)};
    for (const auto& c : components) {
        if (!c.defined_at(zero)) return std::nullopt;
        p.push_back(c.evaluate(zero));
    }
    return p;
}

std::string Arc::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out << ", ";
        out << components[i].to_string();
    }
    return out.str();
}

Arc parse_arc(const std::string& text, std::size_t expected_dim) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (expected_dim != 0 && parts.size() != expected_dim)
        throw Error("arc has " + std::to_string(parts.size()) + " components, expected " +
                    std::to_string(expected_dim));
    Arc a;
    std::vector<std::string> tvar{"t"};
    for (const auto& s : parts) a.components.push_back(parse_ratfun(s, tvar));
    return a;
}

Arc arc_from_polys(const std::vector<UniPoly>& comps) {
    Arc a;
    std::vector<std::string> tvar{"t"};
    for (const auto& u : comps) {
        Poly p = Poly::zero(tvar);
        for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
            Monomial m(1);
            m.e[0] = static_cast<std::uint32_t>(i);
            p.add_term(m, u.coeffs()[i]);
        }
        a.components.push_back(RatFun::from_poly(p));
    }
    return a;
}

Arc constant_arc(const std::vector<Rational>& point) {
    Arc a;
    std::vector<std::string> tvar{"t"};
    for (const auto& c : point) a.components.push_back(RatFun::constant(tvar, c));
    return a;
}

RatFun restrict_to_arc(const RatFun& f, const Arc& gamma) {
    if (gamma.dimension() != f.nvars()) throw ArityError("arc dimension mismatch");
    RatFun dn = substitute(f.den(), gamma.components);
    if (dn.is_zero()) throw Error("arc lies inside the pole locus");
    RatFun nm = substitute(f.num(), gamma.components);
    return nm / dn;
}

ExtValue univariate_limit_at_zero(const RatFun& restriction, Side side) {
    if (restriction.nvars() != 1) throw ArityError("univariate restriction expected");
    if (restriction.is_zero()) return ExtValue::finite(Rational(0));
    UniPoly n = restriction.num().to_univariate(0);
    UniPoly d = restriction.den().to_univariate(0);
    long long v = static_cast<long long>(n.valuation()) - static_cast<long long>(d.valuation());
    Rational lead = n.coeffs()[n.valuation()] / d.coeffs()[d.valuation()];
    if (v > 0) return ExtValue::finite(Rational(0));
    if (v == 0) return ExtValue::finite(lead);
    // pole of order -v: sign from the lowest coefficients and the side
    bool negative_side = (side == Side::MinusZero);
    int s = sign(lead);
    if (negative_side && ((-v) % 2 == 1)) s = -s;
    return s > 0 ? ExtValue::plus_inf() : ExtValue::minus_inf();
}

ExtValue arc_limit(const RatFun& f, const Arc& gamma, Side side) {
    return univariate_limit_at_zero(restrict_to_arc(f, gamma), side);
}

ExtValue arc_limit_two_sided(const RatFun& f, const Arc& gamma) {
    RatFun r = restrict_to_arc(f, gamma);
    ExtValue plus = univariate_limit_at_zero(r, Side::PlusZero);
    ExtValue minus = univariate_limit_at_zero(r, Side::MinusZero);
    if (plus == minus) return plus;
    return ExtValue::indeterminate();
}

} // namespace regulous
