#include "regulous/poly.hpp"

#include "regulous/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace regulous {

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Monomial(p.nvars()), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t index, std::uint32_t exp) {
    Poly p(std::move(vars));
    if (index >= p.nvars()) throw ArityError("variable index out of range");
    Monomial m(p.nvars());
    m.e[index] = exp;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

long long Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long long>(terms_.rbegin()->first.degree());
}

long long Poly::degree_in(std::size_t var) const {
    long long d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long long>(m.e[var]));
    return d;
}

Poly Poly::coeff_in(std::size_t var, std::uint32_t d) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] != d) continue;
        Monomial q = m;
        q.e[var] = 0;
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

const Rational& Poly::coeff(const Monomial& m) const {
    static const Rational kZero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<Monomial, Rational> Poly::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void Poly::check_same_ambient(const Poly& o) const {
    if (vars_ != o.vars_) throw ArityError("ambient ring mismatch");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ambient(o);
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ambient(o);
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ambient(o);
    Poly r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(std::uint64_t n) const {
    Poly r = Poly::constant(vars_, 1);
    Poly base(*this);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars()) throw ArityError("derivative: variable index out of range");
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial q = m;
        q.e[var] -= 1;
        r.add_term(q, c * Rational(m.e[var]));
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw ArityError("evaluate: arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars()) throw ArityError("substitute: arity mismatch");
    std::vector<std::string> target = images.empty() ? vars_ : images[0].vars();
    for (const auto& g : images)
        if (g.vars() != target) throw ArityError("substitute: images in different rings");
    Poly acc = Poly::zero(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i]) t = t * images[i].pow(m.e[i]);
        acc = acc + t;
    }
    return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
    check_same_ambient(b);
    if (b.is_zero()) throw Error("division by zero polynomial");
    Poly r(*this);
    Poly q(vars_);
    auto [lmb, lcb] = b.leading();
    while (!r.is_zero()) {
        auto [lmr, lcr] = r.leading();
        if (!lmb.divides(lmr)) return std::nullopt;
        Monomial mq = lmr.quotient(lmb);
        Rational cq = lcr / lcb;
        Poly t(vars_);
        t.terms_.emplace(mq, cq);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

bool divides(const Poly& d, const Poly& p) { return p.divide_exact(d).has_value(); }

Rational Poly::normalization_factor() const {
    if (terms_.empty()) return Rational(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, abs(numerator(c)));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational f(den_lcm, num_gcd);
    if (terms_.rbegin()->second < 0) f = -f;
    return f;
}

Poly Poly::normalized() const {
    return *this * normalization_factor();
}

bool Poly::even_in(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.e[var] % 2 != 0) return false;
    return true;
}

Poly Poly::substitute_value(std::size_t var, const Rational& value) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        Rational k = c;
        for (std::uint32_t j = 0; j < m.e[var]; ++j) k *= value;
        if (k == 0) continue;
        Monomial q = m;
        q.e[var] = 0;
        r.add_term(q, k);
    }
    return r;
}

UniPoly Poly::to_univariate(std::size_t var) const {
    if (is_zero()) return UniPoly();
    std::vector<Rational> cs(static_cast<std::size_t>(degree_in(var)) + 1, Rational(0));
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (i != var && m.e[i] != 0)
                throw Error("to_univariate: polynomial involves another variable");
        cs[m.e[var]] = c;
    }
    return UniPoly(std::move(cs));
}

// ---------------------------------------------------------------------------
// gcd via primitive subresultant PRS, recursing on the last variable present.
// ---------------------------------------------------------------------------

namespace {

std::optional<std::size_t> last_variable(const Poly& a, const Poly& b) {
    std::size_t n = a.nvars();
    for (std::size_t i = n; i-- > 0;)
        if (a.involves(i) || b.involves(i)) return i;
    return std::nullopt;
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw Error("internal: exact division failed");
    return *q;
}

// Classical pseudo-remainder: prem(a, b) with multiplier lc(b)^(da-db+1).
Poly pseudo_rem(Poly a, const Poly& b, std::size_t var) {
    long long db = b.degree_in(var);
    long long da0 = a.degree_in(var);
    Poly lcb = b.coeff_in(var, static_cast<std::uint32_t>(db));
    long long steps = 0;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        long long da = a.degree_in(var);
        Poly lca = a.coeff_in(var, static_cast<std::uint32_t>(da));
        Poly shift = Poly::variable(a.vars(), var, static_cast<std::uint32_t>(da - db));
        a = a * lcb - b * (lca * shift);
        ++steps;
        if (!a.is_zero() && a.degree_in(var) >= da) throw Error("internal: pseudo_rem stalled");
    }
    long long want = da0 - db + 1;
    for (long long i = steps; i < want; ++i) a = a * lcb;
    return a;
}

} // namespace

Poly Poly::content_in(std::size_t var) const {
    Poly c = Poly::zero(vars_);
    long long d = degree_in(var);
    for (long long i = 0; i <= d; ++i) {
        Poly ci = coeff_in(var, static_cast<std::uint32_t>(i));
        if (!ci.is_zero()) c = gcd_poly(c, ci);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

Poly Poly::primitive_part_in(std::size_t var) const {
    if (is_zero()) return *this;
    return exact_div(*this, content_in(var));
}

Poly gcd_poly(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw ArityError("gcd: ambient ring mismatch");
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();

    auto varopt = last_variable(a, b);
    if (!varopt) return Poly::constant(a.vars(), 1); // both nonzero constants
    std::size_t v = *varopt;

    if (!a.involves(v)) return gcd_poly(a, b.content_in(v));
    if (!b.involves(v)) return gcd_poly(a.content_in(v), b);

    Poly ca = a.content_in(v), cb = b.content_in(v);
    Poly f = exact_div(a, ca), g = exact_div(b, cb);
    Poly cont = gcd_poly(ca, cb);

    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);

    // Subresultant PRS over the coefficient ring Q[vars before v]:
    //   r_{i+1} = prem(r_{i-1}, r_i) / beta_i,
    //   beta_1 = (-1)^(d+1), psi_1 = -1,
    //   psi_{i+1} = (-lc(r_i))^d / psi_i^(d-1), beta_{i+1} = -lc(r_i) * psi_{i+1}^d'.
    long long d = f.degree_in(v) - g.degree_in(v);
    Poly psi = Poly::constant(a.vars(), -1);
    Poly beta = Poly::constant(a.vars(), (d % 2 == 0) ? -1 : 1);
    while (true) {
        Poly r = pseudo_rem(f, g, v);
        if (r.is_zero()) break;
        r = exact_div(r, beta);
        if (r.degree_in(v) == 0) return cont.normalized(); // coprime primitive parts
        Poly gamma = g.coeff_in(v, static_cast<std::uint32_t>(g.degree_in(v)));
        if (d >= 1) {
            Poly t = (-gamma).pow(static_cast<std::uint64_t>(d));
            psi = (d == 1) ? t : exact_div(t, psi.pow(static_cast<std::uint64_t>(d - 1)));
        }
        f = g;
        g = r;
        d = f.degree_in(v) - g.degree_in(v);
        beta = -gamma * psi.pow(static_cast<std::uint64_t>(d));
    }
    Poly prim = g.primitive_part_in(v);
    return (cont * prim).normalized();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw Error("squarefree_part of zero polynomial");
    if (p.is_constant()) return Poly::constant(p.vars(), 1);
    Poly g = p;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        if (!p.involves(v)) continue;
        g = gcd_poly(g, p.derivative(v));
        if (g.is_constant()) break;
    }
    auto q = p.divide_exact(g);
    if (!q) throw Error("internal: squarefree division failed");
    return q->normalized();
}

Poly resultant(const Poly& a, const Poly& b, std::size_t var) {
    if (a.vars() != b.vars()) throw ArityError("resultant: ambient ring mismatch");
    if (a.is_zero() || b.is_zero()) throw Error("resultant of zero polynomial");
    long long da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 && db == 0) throw Error("resultant: both arguments constant in variable");
    if (da == 0) return a.pow(static_cast<std::uint64_t>(db));
    if (db == 0) return b.pow(static_cast<std::uint64_t>(da));

    // Sylvester matrix with polynomial entries, fraction-free Bareiss.
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(a.vars())));
    for (long long i = 0; i < db; ++i)
        for (long long j = 0; j <= da; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                a.coeff_in(var, static_cast<std::uint32_t>(da - j));
    for (long long i = 0; i < da; ++i)
        for (long long j = 0; j <= db; ++j)
            m[static_cast<std::size_t>(db + i)][static_cast<std::size_t>(i + j)] =
                b.coeff_in(var, static_cast<std::uint32_t>(db - j));

    Poly prev = Poly::constant(a.vars(), 1);
    int swaps = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly::zero(a.vars());
            std::swap(m[k], m[piv]);
            ++swaps;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(t, prev);
            }
            m[i][k] = Poly::zero(a.vars());
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (swaps % 2 == 1) det = -det;
    return det;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (a != 1 || m.is_one()) {
            out << regulous::to_string(a);
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed_coeff) out << "*";
            out << vars_[i];
            if (m.e[i] > 1) out << "^" << m.e[i];
            printed_coeff = true;
        }
    }
    return out.str();
}

} // namespace regulous
