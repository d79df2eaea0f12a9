#include "regulous/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace regulous {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& a) {
    return UniPoly(std::vector<Rational>{a});
}

UniPoly UniPoly::linear(const Rational& a, const Rational& b) {
    return UniPoly(std::vector<Rational>{a, b});
}

std::size_t UniPoly::valuation() const {
    if (is_zero()) throw Error("valuation of zero polynomial");
    std::size_t i = 0;
    while (c_[i] == 0) ++i;
    return i;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& k) const {
    if (k == 0) return UniPoly();
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= k;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() < 2) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(i);
    return UniPoly(std::move(r));
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error("univariate division by zero");
    UniPoly r(*this);
    std::vector<Rational> q(degree() >= d.degree() ? c_.size() - d.c_.size() + 1 : 0, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
        Rational f = r.leading() / d.leading();
        q[k] = f;
        std::vector<Rational> sub(k + d.c_.size(), Rational(0));
        for (std::size_t i = 0; i < d.c_.size(); ++i) sub[k + i] = d.c_[i] * f;
        r = r - UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f * (Rational(1) / f.leading()); // monic
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) throw Error("squarefree_part of zero polynomial");
    if (is_constant()) return UniPoly::constant(1);
    UniPoly g = gcd(*this, derivative());
    UniPoly q = divmod(g).first;
    return q * (Rational(1) / q.leading());
}

std::vector<UniPoly> sturm_chain(const UniPoly& u) {
    std::vector<UniPoly> chain{u, u.derivative()};
    while (!chain.back().is_zero()) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = a.divmod(b).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int sturm_variations(const std::vector<UniPoly>& chain, const Rational& a) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(p.evaluate(a));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int UniPoly::count_real_roots() const {
    if (is_zero()) throw Error("count_real_roots of zero polynomial");
    UniPoly u = squarefree_part();
    if (u.is_constant()) return 0;
    // Cauchy bound
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < u.c_.size(); ++i) {
        Rational q = abs(u.c_[i] / u.leading());
        if (q > bound) bound = q;
    }
    bound += 1;
    auto chain = sturm_chain(u);
    return sturm_variations(chain, -bound) - sturm_variations(chain, bound);
}

namespace {

// Divisors of |n| by trial division; throws BudgetError when n does not
// factor within the trial bound (callers convert this to an Unknown).
std::vector<Int> divisors(Int n) {
    n = abs(n);
    if (n == 0) throw Error("divisors of zero");
    std::vector<std::pair<Int, int>> fact;
    Int d = 2;
    int guard = 0;
    while (n > 1) {
        if (d * d > n) {
            fact.emplace_back(n, 1);
            break;
        }
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fact.emplace_back(d, e);
        }
        ++d;
        if (++guard > 2000000) throw BudgetError("integer factorization budget exceeded");
    }
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fact) {
        std::size_t m = divs.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < m; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

std::vector<Rational> UniPoly::rational_roots() const {
    if (is_zero()) throw Error("rational_roots of zero polynomial");
    std::vector<Rational> roots;
    UniPoly u = squarefree_part();
    if (u.is_constant()) return roots;
    std::size_t v = u.valuation();
    if (v > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> shifted(u.c_.begin() + static_cast<long>(v), u.c_.end());
        u = UniPoly(std::move(shifted));
    }
    if (u.is_constant()) return roots;
    // clear denominators to integer coefficients
    Int lcm_den(1);
    for (const auto& c : u.c_) lcm_den = lcm(lcm_den, denominator(c));
    std::vector<Int> ic;
    ic.reserve(u.c_.size());
    Int g(0);
    for (const auto& c : u.c_) {
        Int k = numerator(c * Rational(lcm_den));
        ic.push_back(k);
        g = gcd(g, abs(k));
    }
    for (auto& k : ic) k /= g;
    for (const Int& p : divisors(ic.front())) {
        for (const Int& q : divisors(ic.back())) {
            if (gcd(p, q) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand(p * s, q);
                if (u.evaluate(cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<RealRoot> UniPoly::isolate_real_roots() const {
    if (is_zero()) throw Error("isolate_real_roots of zero polynomial");
    std::vector<RealRoot> out;
    UniPoly u = squarefree_part();
    if (u.is_constant()) return out;

    std::vector<Rational> rats = rational_roots();
    for (const auto& r : rats) {
        UniPoly lin = UniPoly::linear(-r, 1);
        u = u.divmod(lin).first;
    }
    // remaining roots are irrational; rational endpoints are never roots
    if (!u.is_constant()) {
        Rational bound(1);
        for (std::size_t i = 0; i + 1 < u.c_.size(); ++i) {
            Rational q = abs(u.c_[i] / u.leading());
            if (q > bound) bound = q;
        }
        bound += 1;
        auto chain = sturm_chain(u);
        struct Seg {
            Rational lo, hi;
            int vlo, vhi;
        };
        std::vector<Seg> work{{-bound, bound, sturm_variations(chain, -bound),
                               sturm_variations(chain, bound)}};
        std::vector<RealRoot> isolated;
        while (!work.empty()) {
            Seg s = work.back();
            work.pop_back();
            int count = s.vlo - s.vhi;
            if (count <= 0) continue;
            if (count == 1) {
                RealRoot rr;
                rr.exact = false;
                rr.lo = s.lo;
                rr.hi = s.hi;
                isolated.push_back(rr);
                continue;
            }
            Rational mid = (s.lo + s.hi) / 2;
            int vm = sturm_variations(chain, mid);
            work.push_back({s.lo, mid, s.vlo, vm});
            work.push_back({mid, s.hi, vm, s.vhi});
        }
        for (auto& rr : isolated) out.push_back(rr);
    }
    for (const auto& r : rats) {
        RealRoot rr;
        rr.exact = true;
        rr.value = r;
        out.push_back(rr);
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
        Rational ka = a.exact ? a.value : (a.lo + a.hi) / 2;
        Rational kb = b.exact ? b.value : (b.lo + b.hi) / 2;
        return ka < kb;
    });
    return out;
}

bool UniPoly::is_nonnegative() const {
    if (is_zero()) return true;
    if (is_constant()) return c_[0] >= 0;
    if (leading() < 0) return false;
    if (degree() % 2 != 0) return false;
    // odd-multiplicity part = squarefree part of p / gcd(p, p')... extracted
    // via squarefree decomposition: p >= 0 iff lc > 0 and the product of
    // odd-multiplicity factors has no real root.
    UniPoly p = *this;
    UniPoly odd = UniPoly::constant(1);
    int mult = 1;
    while (!p.is_constant()) {
        UniPoly g = gcd(p, p.derivative());
        UniPoly flat = p.divmod(g).first;        // product of distinct factors of p
        UniPoly next_flat = g.is_constant() ? UniPoly::constant(1)
                                            : g.divmod(gcd(g, g.derivative())).first;
        // factors with multiplicity exactly `mult` in the original:
        UniPoly exact = next_flat.is_constant() ? flat : flat.divmod(gcd(flat, next_flat)).first;
        if (mult % 2 == 1 && exact.degree() > 0) odd = odd * exact;
        p = g;
        ++mult;
        if (mult > 64) throw Error("squarefree decomposition runaway");
    }
    if (odd.is_constant()) return true;
    return odd.count_real_roots() == 0;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
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
        if (a != 1 || i == 0) {
            out << regulous::to_string(a);
            if (i > 0) out << "*";
        }
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace regulous
