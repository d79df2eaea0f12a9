#include "regulous/blowup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace regulous {

namespace {

const std::vector<std::string>& chart_vars() {
    static const std::vector<std::string> uv{"u", "v"};
    return uv;
}

Poly chart_u() { return Poly::variable(chart_vars(), 0); }
Poly chart_v() { return Poly::variable(chart_vars(), 1); }

std::size_t line_axis_var(const TrackedLine& l) { return l.axis == 'u' ? 0 : 1; }
std::size_t line_param_var(const TrackedLine& l) { return l.axis == 'u' ? 1 : 0; }

Point2 point_on_line(const TrackedLine& l, const Rational& param) {
    if (l.axis == 'u') return {l.offset, param};
    return {param, l.offset};
}

} // namespace

std::string to_string(ResolutionStatus s) {
    switch (s) {
    case ResolutionStatus::Resolved: return "resolved";
    case ResolutionStatus::BudgetExceeded: return "budget_exceeded";
    case ResolutionStatus::NonrationalCenter: return "nonrational_center";
    case ResolutionStatus::PoleCurve: return "pole_curve";
    }
    return "?";
}

std::string to_string(const Point2& p) {
    return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")";
}

std::vector<int> ResolutionTree::leaves() const {
    std::vector<int> out;
    for (const auto& c : charts)
        if (c.leaf && c.id != 0) out.push_back(c.id);
    if (out.empty() && !charts.empty() && charts[0].leaf) out.push_back(0);
    return out;
}

std::pair<Chart, Chart> blowup_point(const Chart& c, const Point2& center, int first_child_id,
                                     int new_component) {
    const Rational& c1 = center[0];
    const Rational& c2 = center[1];
    Poly u = chart_u(), v = chart_v();
    Poly one = Poly::constant(chart_vars(), 1);

    Chart a, b;
    a.id = first_child_id;
    b.id = first_child_id + 1;
    a.parent = b.parent = c.id;
    a.which = 1;
    b.which = 2;
    a.center = b.center = center;
    a.depth = b.depth = c.depth + 1;

    // chart 1: (u, v) -> (c1 + u, c2 + u v);  chart 2: (u, v) -> (c1 + u v, c2 + v)
    std::vector<Poly> to_parent_a{one * c1 + u, one * c2 + u * v};
    std::vector<Poly> to_parent_b{one * c1 + u * v, one * c2 + v};
    a.map_to_root = {c.map_to_root[0].substitute(to_parent_a),
                     c.map_to_root[1].substitute(to_parent_a)};
    b.map_to_root = {c.map_to_root[0].substitute(to_parent_b),
                     c.map_to_root[1].substitute(to_parent_b)};

    // fresh exceptional component: {u = 0} in chart 1 (all finite directions),
    // {v = 0} in chart 2 (owning only the direction chart 1 misses).
    a.lines.push_back(TrackedLine{'u', Rational(0), new_component, true, Rational(0)});
    b.lines.push_back(TrackedLine{'v', Rational(0), new_component, false, Rational(0)});

    // strict transforms of the parent's tracked lines; each parent copy
    // stays fully visible in exactly one child.
    for (const auto& l : c.lines) {
        if (l.axis == 'u') {
            if (l.offset != c1) {
                // visible in chart 1 as {u = offset - c1}, param v = c2 + (offset-c1) t
                TrackedLine t = l;
                t.offset = l.offset - c1;
                if (!l.owns_all) t.owned_param = (l.owned_param - c2) / (l.offset - c1);
                a.lines.push_back(t);
            } else {
                // passes through the center: strict transform {u = 0} in chart 2
                TrackedLine t = l;
                t.axis = 'u';
                t.offset = Rational(0);
                if (!l.owns_all) t.owned_param = l.owned_param - c2;
                b.lines.push_back(t);
            }
        } else {
            if (l.offset != c2) {
                TrackedLine t = l;
                t.offset = l.offset - c2;
                if (!l.owns_all) t.owned_param = (l.owned_param - c1) / (l.offset - c2);
                b.lines.push_back(t);
            } else {
                TrackedLine t = l;
                t.axis = 'v';
                t.offset = Rational(0);
                if (!l.owns_all) t.owned_param = l.owned_param - c1;
                a.lines.push_back(t);
            }
        }
    }
    return {a, b};
}

RatFun pullback(const RatFun& f, const Chart& c) {
    if (f.nvars() != 2) throw ArityError("pullback: plane functions only");
    Poly n = f.num().substitute(c.map_to_root);
    Poly d = f.den().substitute(c.map_to_root);
    if (d.is_zero()) throw Error("pullback: denominator collapses (non-dominant chart)");
    return RatFun(std::move(n), std::move(d));
}

namespace {

struct LineScan {
    std::vector<Rational> owned_rational_roots;
    bool identically_zero = false;
    bool unowned_irrational = false;
    bool owned_irrational = false;
};

LineScan scan_line(const Poly& den, const TrackedLine& l) {
    LineScan s;
    Poly r = den.substitute_value(line_axis_var(l), l.offset);
    if (r.is_zero()) {
        s.identically_zero = true;
        return s;
    }
    UniPoly u = r.to_univariate(line_param_var(l));
    if (u.is_constant()) return s;
    for (const auto& root : u.isolate_real_roots()) {
        if (root.exact) {
            bool owned = l.owns_all || root.value == l.owned_param;
            if (owned) s.owned_rational_roots.push_back(root.value);
        } else {
            if (l.owns_all)
                s.owned_irrational = true;
            else
                s.unowned_irrational = true;
        }
    }
    return s;
}

} // namespace

namespace {

ResolutionTree resolve_impl(const RatFun& f, const Budget& budget,
                            const std::optional<Point2>& only_point) {
    if (f.nvars() != 2) throw ArityError("resolve_indeterminacy2: n = 2 required");
    ResolutionTree tree;
    tree.root_fun = f;

    Chart root;
    root.id = 0;
    root.map_to_root = {chart_u(), chart_v()};
    root.pullback = RatFun(f.num().substitute(root.map_to_root),
                           f.den().substitute(root.map_to_root));
    tree.charts.push_back(root);

    IndetReport rep = indeterminacy_candidates(f);
    tree.analysis_complete = rep.complete;
    tree.root_points = rep.rational_points;
    tree.curve_factors = rep.curve_factors;
    if (only_point) {
        for (const auto& w : rep.curve_factors)
            if (w.evaluate({(*only_point)[0], (*only_point)[1]}) == 0) {
                tree.status = ResolutionStatus::PoleCurve;
                tree.note = "the point lies on a certified pole curve";
                return tree;
            }
        if (rep.curve_of_poles_flag && !rep.complete) {
            tree.status = ResolutionStatus::PoleCurve;
            tree.note = "a pole curve was detected but could not be localized";
            return tree;
        }
        bool listed = false;
        for (const auto& p : rep.rational_points) listed |= (p == *only_point);
        tree.root_points.clear();
        if (listed) tree.root_points.push_back(*only_point);
    } else {
        if (rep.curve_of_poles_flag) {
            tree.status = ResolutionStatus::PoleCurve;
            tree.note = "denominator vanishes on a real curve";
            return tree;
        }
        if (rep.nonrational_roots_flag) {
            tree.status = ResolutionStatus::NonrationalCenter;
            tree.note = "non-rational indeterminacy candidates certified by Sturm isolation";
            return tree;
        }
    }

    int next_component = 0;
    std::deque<std::pair<int, Point2>> queue; // (chart id, center in chart coords)
    for (const auto& p : tree.root_points) queue.emplace_back(0, p);

    while (!queue.empty()) {
        auto [cid, center] = queue.front();
        queue.pop_front();
        if (tree.charts[cid].depth + 1 > budget.max_depth ||
            static_cast<int>(tree.charts.size()) + 2 > budget.max_charts) {
            tree.status = ResolutionStatus::BudgetExceeded;
            tree.note = "blow-up budget exceeded";
            return tree;
        }
        Point2 root_pt{tree.charts[cid].map_to_root[0].evaluate({center[0], center[1]}),
                       tree.charts[cid].map_to_root[1].evaluate({center[0], center[1]})};
        int comp = next_component++;
        tree.component_root_point[comp] = root_pt;

        auto [a, b] = blowup_point(tree.charts[cid], center, static_cast<int>(tree.charts.size()),
                                   comp);
        tree.charts[cid].leaf = false;
        for (Chart* child : {&a, &b}) {
            child->pullback = pullback(f, *child);
            tree.depth = std::max(tree.depth, child->depth);
        }
        int aid = a.id, bid = b.id;
        tree.charts.push_back(std::move(a));
        tree.charts.push_back(std::move(b));

        for (int id : {aid, bid}) {
            const Chart& ch = tree.charts[id];
            std::set<std::pair<Rational, Rational>> centers;
            for (const auto& l : ch.lines) {
                LineScan s = scan_line(ch.pullback.den(), l);
                if (s.identically_zero) {
                    tree.status = ResolutionStatus::PoleCurve;
                    tree.note = "pullback denominator vanishes along an exceptional component";
                    tree.pole_evidence.push_back({id, l});
                    return tree;
                }
                if (s.owned_irrational) {
                    tree.status = ResolutionStatus::NonrationalCenter;
                    tree.note = "non-rational denominator zero on an exceptional component";
                    return tree;
                }
                for (const auto& w : s.owned_rational_roots)
                    centers.insert({point_on_line(l, w)[0], point_on_line(l, w)[1]});
            }
            // blow up one bad point now; the rest reappear on the inherited
            // strict transforms of the children and are handled there
            if (!centers.empty())
                queue.emplace_back(id, Point2{centers.begin()->first, centers.begin()->second});
        }
    }
    tree.status = ResolutionStatus::Resolved;
    return tree;
}

} // namespace

ResolutionTree resolve_indeterminacy2(const RatFun& f, const Budget& budget) {
    return resolve_impl(f, budget, std::nullopt);
}

ResolutionTree resolve_at_point(const RatFun& f, const Point2& x, const Budget& budget) {
    return resolve_impl(f, budget, x);
}

std::vector<FiberComponent> fiber_values(const ResolutionTree& t, const Point2& x) {
    if (t.status != ResolutionStatus::Resolved)
        throw Error("fiber_values: tree not resolved (status " + to_string(t.status) + ")");
    std::map<int, FiberComponent> by_id;
    std::vector<std::string> tvar{"t"};
    for (const auto& ch : t.charts) {
        if (!ch.leaf || ch.id == 0) continue;
        for (const auto& l : ch.lines) {
            auto it = t.component_root_point.find(l.component);
            if (it == t.component_root_point.end() || it->second != x) continue;
            std::size_t axis = line_axis_var(l), par = line_param_var(l);
            Poly n = ch.pullback.num().substitute_value(axis, l.offset);
            Poly d = ch.pullback.den().substitute_value(axis, l.offset);
            // rename the parameter into a univariate ring
            Poly nt = Poly::zero(tvar), dt = Poly::zero(tvar);
            for (const auto& [m, c] : n.terms()) {
                Monomial mm(1);
                mm.e[0] = m.e[par];
                nt.add_term(mm, c);
            }
            for (const auto& [m, c] : d.terms()) {
                Monomial mm(1);
                mm.e[0] = m.e[par];
                dt.add_term(mm, c);
            }
            RatFun restr(nt, dt);
            auto& fc = by_id[l.component];
            fc.component = l.component;
            fc.copies.push_back({ch.id, l, restr});
        }
    }
    std::vector<FiberComponent> out;
    for (auto& [id, fc] : by_id) {
        fc.constant = true;
        bool first = true;
        for (const auto& cp : fc.copies) {
            if (!cp.restriction.is_constant()) {
                fc.constant = false;
                break;
            }
            Rational v = cp.restriction.constant_value();
            if (first) {
                fc.value = v;
                first = false;
            } else if (v != fc.value) {
                // copies of one component agree on a cofinite overlap, so
                // constant copies can never disagree
                throw Error("internal: component copies carry different constants");
            }
        }
        out.push_back(std::move(fc));
    }
    return out;
}

// --- witnesses --------------------------------------------------------------

namespace {

std::vector<Rational> params_by_height(const Int& h) {
    std::vector<Rational> out = rationals_of_height(h);
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
        Int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        Rational aa = abs(a), ab = abs(b);
        if (aa != ab) return aa < ab;
        return a > b; // positive first
    });
    return out;
}

Arc transversal_arc(const ResolutionTree& t, int chart_id, const TrackedLine& l,
                    const Rational& param) {
    const Chart& ch = t.charts[static_cast<std::size_t>(chart_id)];
    // approach the line point transversally: u := offset + tau (or v dual)
    std::vector<std::string> tvar{"t"};
    Poly tau = Poly::variable(tvar, 0);
    Poly one = Poly::constant(tvar, 1);
    std::vector<Poly> images(2, Poly::zero(tvar));
    if (l.axis == 'u') {
        images[0] = one * l.offset + tau;
        images[1] = one * param;
    } else {
        images[0] = one * param;
        images[1] = one * l.offset + tau;
    }
    Arc arc;
    for (int i = 0; i < 2; ++i)
        arc.components.push_back(RatFun::from_poly(ch.map_to_root[i].substitute(images)));
    return arc;
}

// Two parameter values where the (nonconstant) restriction takes different
// finite values and the transversal arcs verify via arc_limit.
std::optional<WitnessArcs> nonconstant_witness(const RatFun& g, const Monomial& index,
                                               const ResolutionTree& t, int chart_id,
                                               const TrackedLine& l, const RatFun& restriction,
                                               const Point2& base) {
    std::vector<Rational> params = params_by_height(Int(6));
    std::vector<std::pair<Rational, Rational>> seen; // (param, value)
    for (const auto& w : params) {
        std::vector<Rational> wv{w};
        if (!restriction.defined_at(wv)) continue;
        Rational val = restriction.evaluate(wv);
        for (const auto& [w0, val0] : seen) {
            if (val0 == val) continue;
            Arc a = transversal_arc(t, chart_id, l, w0);
            Arc b = transversal_arc(t, chart_id, l, w);
            try {
                ExtValue la = arc_limit(g, a), lb = arc_limit(g, b);
                if (la.is_finite() && lb.is_finite() && !(la == lb)) {
                    WitnessArcs wit;
                    wit.coeff_index = index;
                    wit.a = a;
                    wit.b = b;
                    wit.limit_a = la;
                    wit.limit_b = lb;
                    wit.base = {base[0], base[1]};
                    return wit;
                }
            } catch (const Error&) {
                // arc inside pole locus of g; try other parameters
            }
        }
        seen.emplace_back(w, val);
        if (seen.size() > 12) break;
    }
    return std::nullopt;
}

std::optional<WitnessInfiniteArc> pole_witness(const RatFun& g, const Monomial& index,
                                               const ResolutionTree& t,
                                               const ResolutionTree::PoleEvidence& ev) {
    auto it = t.component_root_point.find(ev.line.component);
    Point2 base = it != t.component_root_point.end() ? it->second
                                                     : Point2{Rational(0), Rational(0)};
    for (const auto& w : params_by_height(Int(6))) {
        Arc a = transversal_arc(t, ev.chart, ev.line, w);
        try {
            ExtValue la = arc_limit(g, a);
            if (la.is_infinite()) {
                WitnessInfiniteArc wit;
                wit.coeff_index = index;
                wit.a = a;
                wit.limit = la;
                wit.base = {base[0], base[1]};
                return wit;
            }
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

// Witness when two different components over the same point carry different
// constants: one transversal arc per component.
std::optional<WitnessArcs> disagreement_witness(const RatFun& g, const Monomial& index,
                                                const ResolutionTree& t, const FiberComponent& c1,
                                                const FiberComponent& c2, const Point2& base) {
    for (const auto& cp1 : c1.copies) {
        for (const auto& cp2 : c2.copies) {
            for (const auto& w1 : params_by_height(Int(3))) {
                for (const auto& w2 : params_by_height(Int(3))) {
                    Arc a = transversal_arc(t, cp1.chart, cp1.line, w1);
                    Arc b = transversal_arc(t, cp2.chart, cp2.line, w2);
                    try {
                        ExtValue la = arc_limit(g, a), lb = arc_limit(g, b);
                        if (la.is_finite() && lb.is_finite() && !(la == lb)) {
                            WitnessArcs wit;
                            wit.coeff_index = index;
                            wit.a = a;
                            wit.b = b;
                            wit.limit_a = la;
                            wit.limit_b = lb;
                            wit.base = {base[0], base[1]};
                            return wit;
                        }
                    } catch (const Error&) {
                    }
                }
            }
        }
    }
    return std::nullopt;
}

struct Decide0Result {
    Verdict verdict; // k = 0 verdict for one jet coefficient
};

// Decide continuous extendability of one rational coefficient g; when
// `only_point` is set, analysis and claims are restricted to that point.
Verdict decide0(const RatFun& g, const Monomial& index, const Budget& budget,
                const std::optional<Point2>& only_point) {
    Verdict v;
    v.k = 0;
    if (certified_positive(g.den())) {
        v.tag = Verdict::Tag::Regulous;
        return v;
    }
    ResolutionTree t;
    try {
        t = only_point ? resolve_at_point(g, *only_point, budget)
                       : resolve_indeterminacy2(g, budget);
    } catch (const BudgetError& e) {
        v.tag = Verdict::Tag::Unknown;
        v.reason = e.what();
        return v;
    }
    switch (t.status) {
    case ResolutionStatus::PoleCurve: {
        if (!t.pole_evidence.empty()) {
            auto wit = pole_witness(g, index, t, t.pole_evidence.front());
            if (wit) {
                v.tag = Verdict::Tag::NotRegulous;
                v.infinite_witness = wit;
                return v;
            }
        }
        // root-level pole curve: probe battery arcs through the candidates
        // and through sample points on the certified pole curves
        std::vector<Point2> bases = t.root_points;
        for (const auto& w : t.curve_factors)
            for (const auto& p : sample_curve_points(w, Int(3))) bases.push_back(p);
        for (const auto& p : bases) {
            auto w = refute_by_arcs(g, default_battery2(p, budget.arc_height));
            if (w) {
                v.tag = Verdict::Tag::NotRegulous;
                if (w->b) {
                    WitnessArcs wa;
                    wa.coeff_index = index;
                    wa.a = w->a;
                    wa.b = *w->b;
                    wa.limit_a = w->limit_a;
                    wa.limit_b = w->limit_b;
                    wa.base = w->base;
                    v.arc_witness = wa;
                } else {
                    WitnessInfiniteArc wi;
                    wi.coeff_index = index;
                    wi.a = w->a;
                    wi.limit = w->limit_a;
                    wi.base = w->base;
                    v.infinite_witness = wi;
                }
                return v;
            }
        }
        v.tag = Verdict::Tag::Unknown;
        v.reason = t.note;
        return v;
    }
    case ResolutionStatus::NonrationalCenter:
    case ResolutionStatus::BudgetExceeded: {
        for (const auto& p : t.root_points) {
            auto w = refute_by_arcs(g, default_battery2(p, budget.arc_height));
            if (w) {
                v.tag = Verdict::Tag::NotRegulous;
                if (w->b) {
                    WitnessArcs wa;
                    wa.coeff_index = index;
                    wa.a = w->a;
                    wa.b = *w->b;
                    wa.limit_a = w->limit_a;
                    wa.limit_b = w->limit_b;
                    wa.base = w->base;
                    v.arc_witness = wa;
                } else {
                    WitnessInfiniteArc wi;
                    wi.coeff_index = index;
                    wi.a = w->a;
                    wi.limit = w->limit_a;
                    wi.base = w->base;
                    v.infinite_witness = wi;
                }
                return v;
            }
        }
        v.tag = Verdict::Tag::Unknown;
        v.reason = t.note;
        return v;
    }
    case ResolutionStatus::Resolved: break;
    }

    for (const auto& x : t.root_points) {
        if (only_point && !(x == *only_point)) continue;
        auto comps = fiber_values(t, x);
        // non-constant copy refutes continuity at x
        for (const auto& fc : comps) {
            for (const auto& cp : fc.copies) {
                if (cp.restriction.is_constant()) continue;
                auto wit = nonconstant_witness(g, index, t, cp.chart, cp.line, cp.restriction, x);
                v.tag = Verdict::Tag::NotRegulous;
                if (wit)
                    v.arc_witness = wit;
                else
                    v.reason = "non-constant exceptional fiber (arc synthesis failed)";
                return v;
            }
        }
        // all copies constant; all components over x must agree
        std::optional<Rational> common;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (!common)
                common = comps[i].value;
            else if (comps[i].value != *common) {
                auto wit = disagreement_witness(g, index, t, comps[0], comps[i], x);
                v.tag = Verdict::Tag::NotRegulous;
                if (wit)
                    v.arc_witness = wit;
                else
                    v.reason = "exceptional components over one point carry different values";
                return v;
            }
        }
        if (common) v.values[x] = *common;
    }

    if (!t.analysis_complete && !only_point) {
        v.tag = Verdict::Tag::Unknown;
        v.reason = "denominator real zero set not certified finite; analyzed points all pass";
        return v;
    }
    if (only_point && !t.analysis_complete) {
        v.tag = Verdict::Tag::Unknown;
        v.reason = "denominator zero set analysis incomplete near the point";
        return v;
    }
    v.tag = Verdict::Tag::Regulous;
    return v;
}

} // namespace

Verdict decide_regulous2(const RatFun& f, int k, const Budget& budget) {
    if (f.nvars() != 2) throw ArityError("decide_regulous2: n = 2 required");
    Jet j = jet(f, k);
    Verdict out;
    out.k = k;
    for (const auto& [index, coeff] : j.coeffs) {
        Verdict c = decide0(coeff, index, budget, std::nullopt);
        if (c.tag == Verdict::Tag::NotRegulous) {
            c.k = k;
            return c;
        }
        if (c.tag == Verdict::Tag::Unknown) {
            c.k = k;
            return c;
        }
        if (index.is_one()) out.values = c.values;
    }
    out.tag = Verdict::Tag::Regulous;
    return out;
}

Verdict decide_at_point(const RatFun& f, const Point2& x, int k, const Budget& budget) {
    if (f.nvars() != 2) throw ArityError("decide_at_point: n = 2 required");
    Jet j = jet(f, k);
    Verdict out;
    out.k = k;
    for (const auto& [index, coeff] : j.coeffs) {
        if (coeff.defined_at({x[0], x[1]})) {
            if (index.is_one()) out.values[x] = coeff.evaluate({x[0], x[1]});
            continue;
        }
        Verdict c = decide0(coeff, index, budget, x);
        if (c.tag != Verdict::Tag::Regulous) {
            c.k = k;
            return c;
        }
        if (index.is_one()) out.values = c.values;
    }
    out.tag = Verdict::Tag::Regulous;
    return out;
}

KmaxResult kmax(const RatFun& f, int cap, const Budget& budget) {
    KmaxResult r;
    IndetReport rep = indeterminacy_candidates(f);
    if (rep.complete && rep.rational_points.empty() && !rep.curve_of_poles_flag &&
        !rep.nonrational_roots_flag) {
        r.tag = KmaxResult::Tag::AtLeastCap;
        r.k = cap;
        return r;
    }
    int best = -1;
    for (int k = 0; k <= cap; ++k) {
        Verdict v = decide_regulous2(f, k, budget);
        if (v.tag == Verdict::Tag::Regulous) {
            best = k;
            continue;
        }
        if (v.tag == Verdict::Tag::NotRegulous) {
            if (best < 0) {
                r.tag = KmaxResult::Tag::NotRegulousAtAll;
                return r;
            }
            r.tag = KmaxResult::Tag::Value;
            r.k = best;
            return r;
        }
        r.tag = KmaxResult::Tag::Unknown;
        r.reason = v.reason;
        return r;
    }
    r.tag = KmaxResult::Tag::AtLeastCap;
    r.k = cap;
    return r;
}

Stratification2 stratify2(const RatFun& f, const Budget& budget) {
    Verdict v = decide_regulous2(f, 0, budget);
    if (v.tag != Verdict::Tag::Regulous)
        throw Error("stratify2: function is not certified regulous (" + v.to_string() + ")");
    Stratification2 s;
    s.open_stratum_den = f.den();
    for (const auto& [p, val] : v.values) s.point_strata.emplace_back(p, val);
    return s;
}

std::vector<Arc> default_battery2(const Point2& base, const Int& height) {
    std::vector<Arc> arcs;
    std::vector<std::string> tvar{"t"};
    Poly t = Poly::variable(tvar, 0);
    Poly one = Poly::constant(tvar, 1);
    auto coef = params_by_height(height);
    for (const auto& a : coef) {
        for (const auto& b : coef) {
            Poly first = one * base[0] + t;
            Poly second = one * base[1] + t * a + t * t * b;
            Arc g1;
            g1.components = {RatFun::from_poly(first), RatFun::from_poly(second)};
            arcs.push_back(g1);
            Arc g2;
            g2.components = {RatFun::from_poly(one * base[0] + t * a + t * t * b),
                             RatFun::from_poly(one * base[1] + t)};
            arcs.push_back(g2);
        }
    }
    return arcs;
}

std::optional<RefutationWitness> refute_by_arcs(const RatFun& f,
                                                const std::vector<Arc>& battery) {
    std::map<std::vector<Rational>, std::pair<Arc, ExtValue>> best;
    for (const auto& arc : battery) {
        auto base = arc.base_point();
        if (!base) continue;
        ExtValue lim;
        try {
            lim = arc_limit(f, arc);
        } catch (const Error&) {
            continue; // arc inside pole locus
        }
        if (lim.is_infinite()) {
            RefutationWitness w;
            w.a = arc;
            w.limit_a = lim;
            w.base = *base;
            return w;
        }
        auto it = best.find(*base);
        if (it == best.end()) {
            // seed the group with the exact value of f at the base point when defined
            if (f.defined_at(*base)) {
                Arc c = constant_arc(*base);
                best.emplace(*base,
                             std::make_pair(c, ExtValue::finite(f.evaluate(*base))));
                it = best.find(*base);
            }
        }
        if (it != best.end() && !(it->second.second == lim)) {
            RefutationWitness w;
            w.a = it->second.first;
            w.b = arc;
            w.limit_a = it->second.second;
            w.limit_b = lim;
            w.base = *base;
            return w;
        }
        if (it == best.end()) best.emplace(*base, std::make_pair(arc, lim));
    }
    return std::nullopt;
}

std::string Verdict::to_string() const {
    std::ostringstream out;
    switch (tag) {
    case Tag::Regulous: {
        out << "Regulous(" << k << ")";
        for (const auto& [p, v] : values)
            out << ", value " << regulous::to_string(v) << " at " << regulous::to_string(p);
        break;
    }
    case Tag::NotRegulous: {
        out << "NotRegulous";
        if (arc_witness) {
            out << ": arcs [" << arc_witness->a.to_string() << "] vs ["
                << arc_witness->b.to_string() << "] give " << arc_witness->limit_a.to_string()
                << " vs " << arc_witness->limit_b.to_string();
            if (!arc_witness->coeff_index.is_one()) {
                out << " on jet coefficient (";
                for (std::size_t i = 0; i < arc_witness->coeff_index.e.size(); ++i)
                    out << (i ? "," : "") << arc_witness->coeff_index.e[i];
                out << ")";
            }
        } else if (infinite_witness) {
            out << ": arc [" << infinite_witness->a.to_string() << "] has limit "
                << infinite_witness->limit.to_string();
        } else if (!reason.empty()) {
            out << ": " << reason;
        }
        break;
    }
    case Tag::Unknown: out << "Unknown(" << reason << ")"; break;
    }
    return out.str();
}

std::string KmaxResult::to_string() const {
    switch (tag) {
    case Tag::Value: return "kmax = " + std::to_string(k);
    case Tag::AtLeastCap: return "kmax >= " + std::to_string(k) + " (search cap)";
    case Tag::NotRegulousAtAll: return "not regulous for any k";
    case Tag::Unknown: return "Unknown(" + reason + ")";
    }
    return "?";
}

} // namespace regulous
