#include "regulous/zeroset.hpp"

#include "regulous/unipoly.hpp"

#include <algorithm>

namespace regulous {

namespace {

void add_point(std::vector<Point2>& pts, const Point2& p) {
    for (const auto& q : pts)
        if (q == p) return;
    pts.push_back(p);
}

// Lines {var = root} for every real root of a univariate factor.
void absorb_univariate_factor(PlaneZeroAnalysis& out, const Poly& factor, std::size_t var) {
    UniPoly u = factor.to_univariate(var);
    if (u.count_real_roots() > 0) {
        out.curve_flag = true;
        out.curve_factors.push_back(factor.normalized());
    }
}

// Zero structure of sum c_j(x) * y^(2j) with all c_j >= 0 (or the symmetric
// case). `evenvar` is the even variable, `base` the other one.
bool even_variable_analysis(PlaneZeroAnalysis& out, const Poly& s, std::size_t evenvar,
                            std::size_t base) {
    long long d = s.degree_in(evenvar);
    std::vector<UniPoly> cs;
    for (long long j = 0; j <= d; j += 2) {
        Poly cj = s.coeff_in(evenvar, static_cast<std::uint32_t>(j));
        if (cj.is_zero()) continue;
        cs.push_back(cj.to_univariate(base));
    }
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& c : cs) {
        if (!c.is_nonnegative()) all_nonneg = false;
        if (!(-c).is_nonnegative()) all_nonpos = false;
    }
    if (!all_nonneg && !all_nonpos) return false;

    // s = 0 iff every summand vanishes. Common roots of all c_j give full
    // lines {base = root}; other roots of c_0 give points on {evenvar = 0}.
    UniPoly g;
    for (const auto& c : cs) g = g.is_zero() ? c : gcd(g, c);
    Poly c0 = s.coeff_in(evenvar, 0);
    if (!g.is_constant() && g.count_real_roots() > 0) {
        out.curve_flag = true;
        // minimal rational description of the common-root lines
        Poly gml = Poly::zero(s.vars());
        for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
            Monomial m(s.vars().size());
            m.e[base] = static_cast<std::uint32_t>(i);
            gml.add_term(m, g.coeffs()[i]);
        }
        out.curve_factors.push_back(gml.normalized());
    }
    if (c0.is_zero()) {
        // whole line {evenvar-axis}: s vanishes on {base arbitrary? no:
        // c_0 == 0 means s has no even-var-free part; zero set contains the
        // line {evenvar = 0} entirely.
        Poly axis = Poly::variable(s.vars(), evenvar);
        out.curve_flag = true;
        out.curve_factors.push_back(axis.normalized());
    } else {
        UniPoly u0 = c0.to_univariate(base);
        for (const auto& r : u0.isolate_real_roots()) {
            if (!r.exact) {
                out.nonrational_flag = true;
                continue;
            }
            if (!g.is_constant() && g.evaluate(r.value) == 0) continue; // on a line already
            Point2 pt;
            pt[base] = r.value;
            pt[evenvar] = Rational(0);
            add_point(out.points, pt);
        }
    }
    out.complete = true;
    return true;
}

} // namespace

std::vector<Rational> rationals_of_height(const Int& h) {
    std::vector<Rational> out;
    long hh = static_cast<long>(h);
    for (long d = 1; d <= hh; ++d)
        for (long n = -hh; n <= hh; ++n) {
            Rational r(n, d);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool certified_nonnegative(const Poly& p) {
    if (p.is_zero()) return true;
    if (p.is_constant()) return p.constant_value() >= 0;
    std::vector<std::size_t> present;
    for (std::size_t v = 0; v < p.nvars(); ++v)
        if (p.involves(v)) present.push_back(v);
    if (present.size() == 1) return p.to_univariate(present[0]).is_nonnegative();
    for (std::size_t v : present) {
        if (!p.even_in(v)) continue;
        bool ok = true;
        for (long long j = 0; j <= p.degree_in(v) && ok; j += 2) {
            Poly cj = p.coeff_in(v, static_cast<std::uint32_t>(j));
            if (!cj.is_zero() && !certified_nonnegative(cj)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

bool certified_positive(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return p.constant_value() > 0;
    std::vector<std::size_t> present;
    for (std::size_t v = 0; v < p.nvars(); ++v)
        if (p.involves(v)) present.push_back(v);
    if (present.size() == 1) {
        UniPoly u = p.to_univariate(present[0]);
        return u.count_real_roots() == 0 && u.evaluate(Rational(0)) > 0;
    }
    for (std::size_t v : present) {
        if (!p.even_in(v)) continue;
        Poly c0 = p.coeff_in(v, 0);
        if (!certified_positive(c0)) continue;
        bool ok = true;
        for (long long j = 2; j <= p.degree_in(v) && ok; j += 2) {
            Poly cj = p.coeff_in(v, static_cast<std::uint32_t>(j));
            if (!cj.is_zero() && !certified_nonnegative(cj)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

PlaneZeroAnalysis analyze_plane_zeros(const Poly& p, const ZeroSetOptions& opts) {
    if (p.nvars() != 2) throw ArityError("analyze_plane_zeros: two variables expected");
    if (p.is_zero()) throw Error("analyze_plane_zeros: zero polynomial");
    PlaneZeroAnalysis out;
    if (p.is_constant()) {
        out.complete = true;
        return out;
    }
    Poly s = squarefree_part(p);

    // Univariate polynomial: axis-parallel lines, exact.
    if (!s.involves(0) || !s.involves(1)) {
        std::size_t v = s.involves(0) ? 0 : 1;
        UniPoly u = s.to_univariate(v);
        if (u.count_real_roots() > 0) {
            out.curve_flag = true;
            out.curve_factors.push_back(s.normalized());
        }
        out.complete = true;
        return out;
    }

    // Strip univariate contents: factors free of one variable are unions of
    // axis-parallel lines, decided exactly by Sturm.
    for (std::size_t var : {std::size_t{1}, std::size_t{0}}) {
        Poly c = s.content_in(var); // polynomial free of `var`
        if (!c.is_constant()) {
            std::size_t other = 1 - var;
            absorb_univariate_factor(out, c, other);
            s = *s.divide_exact(c);
        }
        if (s.is_constant()) {
            out.complete = true;
            return out;
        }
        if (!s.involves(0) || !s.involves(1)) {
            std::size_t v2 = s.involves(0) ? 0 : 1;
            absorb_univariate_factor(out, s, v2);
            out.complete = true;
            return out;
        }
    }

    // Exact happy path: even powers of one variable with one-signed
    // coefficient polynomials.
    if (s.even_in(1) && even_variable_analysis(out, s, 1, 0)) return out;
    if (s.even_in(0) && even_variable_analysis(out, s, 0, 1)) return out;

    // Sampled fallback: sound evidence only, never complete.
    out.complete = false;
    auto grid = rationals_of_height(opts.probe_height);
    int pos = 0, neg = 0;
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            int sg = sign(s.evaluate({a, b}));
            if (sg > 0) ++pos;
            if (sg < 0) ++neg;
            if (pos && neg) break;
        }
        if (pos && neg) break;
    }
    if (pos && neg) out.curve_flag = true;

    // Candidate isolated zeros: critical points of s (every isolated real
    // zero is critical). s is squarefree and bi-primitive here, so the
    // eliminants are nonzero.
    Poly rx = resultant(s, s.derivative(1), 1); // in x
    Poly ry = resultant(s, s.derivative(0), 0); // in y
    UniPoly ux = rx.to_univariate(0);
    UniPoly uy = ry.to_univariate(1);
    std::vector<Rational> xs, ys;
    for (const auto& r : ux.isolate_real_roots()) {
        if (r.exact)
            xs.push_back(r.value);
        else
            out.nonrational_flag = true;
    }
    for (const auto& r : uy.isolate_real_roots()) {
        if (r.exact)
            ys.push_back(r.value);
        else
            out.nonrational_flag = true;
    }
    for (const auto& a : xs)
        for (const auto& b : ys)
            if (s.evaluate({a, b}) == 0) add_point(out.points, {a, b});
    return out;
}

std::vector<Point2> sample_curve_points(const Poly& w, const Int& height) {
    std::vector<Point2> out;
    if (w.nvars() != 2 || w.is_zero() || w.is_constant()) return out;
    auto add = [&out](const Point2& p) {
        for (const auto& q : out)
            if (q == p) return;
        out.push_back(p);
    };
    if (!w.involves(1)) {
        for (const auto& r : w.to_univariate(0).rational_roots())
            for (int b : {0, 1, -1}) add({r, Rational(b)});
        return out;
    }
    if (!w.involves(0)) {
        for (const auto& r : w.to_univariate(1).rational_roots())
            for (int a : {0, 1, -1}) add({Rational(a), r});
        return out;
    }
    for (const auto& a : rationals_of_height(height)) {
        Poly slice = w.substitute_value(0, a);
        if (slice.is_zero()) {
            for (int b : {0, 1, -1}) add({a, Rational(b)});
            continue;
        }
        if (slice.is_constant()) continue;
        for (const auto& r : slice.to_univariate(1).rational_roots()) add({a, r});
        if (out.size() > 8) break;
    }
    return out;
}

IndetReport indeterminacy_candidates(const RatFun& f, const ZeroSetOptions& opts) {
    if (f.nvars() != 2) throw ArityError("indeterminacy_candidates: n = 2 required");
    IndetReport rep;
    const Poly& q = f.den();
    if (certified_positive(q)) {
        rep.complete = true;
        return rep;
    }
    PlaneZeroAnalysis a = analyze_plane_zeros(q, opts);
    rep.curve_of_poles_flag = a.curve_flag;
    rep.nonrational_roots_flag = a.nonrational_flag;
    rep.complete = a.complete;
    rep.rational_points = a.points;
    rep.curve_factors = a.curve_factors;

    if (!a.complete) {
        // Supplement with rational common zeros of (num, den) found by
        // resultant elimination, as long as each variable can be eliminated.
        const Poly& p = f.num();
        auto add_pair_candidates = [&](void) {
            bool py = p.involves(1) || q.involves(1);
            bool px = p.involves(0) || q.involves(0);
            if (!px || !py) return;
            Poly rx = resultant(p, q, 1);
            Poly ry = resultant(p, q, 0);
            if (rx.is_zero() || ry.is_zero()) return;
            std::vector<Rational> xs, ys;
            if (!rx.is_constant())
                for (const auto& r : rx.to_univariate(0).isolate_real_roots()) {
                    if (r.exact)
                        xs.push_back(r.value);
                    else
                        rep.nonrational_roots_flag = true;
                }
            if (!ry.is_constant())
                for (const auto& r : ry.to_univariate(1).isolate_real_roots()) {
                    if (r.exact)
                        ys.push_back(r.value);
                    else
                        rep.nonrational_roots_flag = true;
                }
            for (const auto& x0 : xs)
                for (const auto& y0 : ys)
                    if (q.evaluate({x0, y0}) == 0) {
                        bool seen = false;
                        for (const auto& pt : rep.rational_points)
                            seen |= (pt == Point2{x0, y0});
                        if (!seen) rep.rational_points.push_back({x0, y0});
                    }
        };
        add_pair_candidates();
    }
    std::sort(rep.rational_points.begin(), rep.rational_points.end(),
              [](const Point2& u, const Point2& v) {
                  return u[0] != v[0] ? u[0] < v[0] : u[1] < v[1];
              });
    return rep;
}

} // namespace regulous
