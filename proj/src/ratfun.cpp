#include "regulous/ratfun.hpp"

#include <array>

namespace regulous {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw ArityError("RatFun: ambient ring mismatch");
    if (den_.is_zero()) throw Error("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.vars(), 1);
        return;
    }
    Poly g = gcd_poly(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    Rational f = den_.normalization_factor();
    den_ = den_ * f;
    num_ = num_ * f;
}

RatFun RatFun::from_poly(Poly p) {
    Poly one = Poly::constant(p.vars(), 1);
    return RatFun(std::move(p), std::move(one));
}

RatFun RatFun::constant(std::vector<std::string> vars, const Rational& c) {
    return from_poly(Poly::constant(std::move(vars), c));
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw Error("division by the zero function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::pow(std::uint64_t n) const {
    return RatFun(num_.pow(n), den_.pow(n));
}

RatFun RatFun::derivative(std::size_t var) const {
    Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFun(std::move(n), den_ * den_);
}

Rational RatFun::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw Error("evaluation at a pole / indeterminacy point");
    return num_.evaluate(point) / d;
}

bool RatFun::defined_at(const std::vector<Rational>& point) const {
    return den_.evaluate(point) != 0;
}

RatFun RatFun::substitute(const std::vector<RatFun>& images) const {
    RatFun n = regulous::substitute(num_, images);
    RatFun d = regulous::substitute(den_, images);
    if (d.is_zero()) throw Error("substitution maps denominator to zero");
    return n / d;
}

RatFun substitute(const Poly& p, const std::vector<RatFun>& images) {
    if (images.size() != p.nvars()) throw ArityError("substitute: arity mismatch");
    std::vector<std::string> target =
        images.empty() ? p.vars() : images[0].vars();
    for (const auto& g : images)
        if (g.vars() != target) throw ArityError("substitute: images in different rings");
    RatFun acc = RatFun::constant(target, 0);
    for (const auto& [m, c] : p.terms()) {
        RatFun t = RatFun::constant(target, c);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i]) t = t * images[i].pow(m.e[i]);
        acc = acc + t;
    }
    return acc;
}

std::string RatFun::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    bool nsimple = num_.terms().size() <= 1;
    bool dsimple = den_.terms().size() <= 1;
    return (nsimple ? n : "(" + n + ")") + "/" + (dsimple ? d : "(" + d + ")");
}

std::vector<Monomial> multi_indices_upto(std::size_t n, int k) {
    std::vector<Monomial> out{Monomial(n)};
    std::vector<Monomial> frontier{Monomial(n)};
    for (int d = 1; d <= k; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            // extend only at or after the last raised index to avoid duplicates
            std::size_t start = 0;
            for (std::size_t i = n; i-- > 0;)
                if (m.e[i] != 0) {
                    start = i;
                    break;
                }
            for (std::size_t i = start; i < n; ++i) {
                Monomial q = m;
                q.e[i] += 1;
                next.push_back(q);
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

Jet jet(const RatFun& f, int k) {
    if (k < 0) throw Error("jet: negative order");
    Jet j;
    j.order = k;
    j.coeffs.emplace(Monomial(f.nvars()), f);
    std::vector<Monomial> idx = multi_indices_upto(f.nvars(), k);
    for (const auto& m : idx) {
        if (m.is_one()) continue;
        // differentiate from a predecessor index
        std::size_t v = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0) {
                v = i;
                break;
            }
        Monomial prev = m;
        prev.e[v] -= 1;
        j.coeffs.emplace(m, j.coeffs.at(prev).derivative(v));
    }
    return j;
}

namespace {

Rational binom_multi(const Monomial& i, const Monomial& jm) {
    // product over coordinates of C(i_t, j_t)
    Rational r(1);
    for (std::size_t t = 0; t < i.e.size(); ++t) {
        std::uint32_t n = i.e[t], k = jm.e[t];
        Rational c(1);
        for (std::uint32_t s = 0; s < k; ++s) c = c * Rational(n - s) / Rational(s + 1);
        r *= c;
    }
    return r;
}

} // namespace

Jet jet_product_truncated(const Jet& a, const Jet& b, int ell) {
    Jet out;
    out.order = ell;
    std::size_t n = a.coeffs.begin()->second.nvars();
    for (const auto& m : multi_indices_upto(n, ell)) {
        RatFun acc = RatFun::constant(a.coeffs.begin()->second.vars(), 0);
        // d^I(fg) = sum_{J <= I} C(I,J) d^J f * d^(I-J) g
        for (const auto& [jm, fj] : a.coeffs) {
            if (!jm.divides(m)) continue;
            Monomial km = m.quotient(jm);
            auto it = b.coeffs.find(km);
            if (it == b.coeffs.end()) continue;
            acc = acc + fj * it->second * RatFun::constant(fj.vars(), binom_multi(m, jm));
        }
        out.coeffs.emplace(m, acc);
    }
    return out;
}

RatFun glue_regular(const std::vector<std::array<Poly, 3>>& pieces) {
    if (pieces.empty()) throw Error("glue_regular: empty piece list");
    const auto& vars = pieces[0][0].vars();
    Poly num = Poly::zero(vars);
    Poly den = Poly::zero(vars);
    for (const auto& [p, q, s] : pieces) {
        if (q.is_zero() || s.is_zero()) throw Error("glue_regular: zero q_i or s_i");
        Poly s2 = s * s;
        num = num + s2 * p * q;
        den = den + s2 * q * q;
    }
    return RatFun(std::move(num), std::move(den));
}

} // namespace regulous
