#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include "regulous/blowup.hpp"

using namespace regulous;
using testutil::F;
using testutil::P;
using testutil::Rng;
using testutil::xy;

namespace {

const std::vector<std::string>& uv() {
    static const std::vector<std::string> v{"u", "v"};
    return v;
}

Chart root_chart() {
    Chart c;
    c.id = 0;
    c.map_to_root = {Poly::variable(uv(), 0), Poly::variable(uv(), 1)};
    return c;
}

} // namespace

TEST_CASE("blowup_point: standard charts at the origin and translated") {
    Chart root = root_chart();
    auto [a, b] = blowup_point(root, {Rational(0), Rational(0)}, 1, 0);
    CHECK(a.map_to_root[0] == P("u", uv()));
    CHECK(a.map_to_root[1] == P("u*v", uv()));
    CHECK(b.map_to_root[0] == P("u*v", uv()));
    CHECK(b.map_to_root[1] == P("v", uv()));

    auto [a1, b1] = blowup_point(root, {Rational(1), Rational(0)}, 1, 0);
    CHECK(a1.map_to_root[0] == P("1+u", uv()));
    CHECK(a1.map_to_root[1] == P("u*v", uv()));

    // nested: blow chart a at its origin; composed map (u, u^2 v)
    auto [a2, b2] = blowup_point(a, {Rational(0), Rational(0)}, 3, 1);
    CHECK(a2.map_to_root[0] == P("u", uv()));
    CHECK(a2.map_to_root[1] == P("u^2*v", uv()));
}

TEST_CASE("pullback: worked examples") {
    Chart root = root_chart();
    auto [a, b] = blowup_point(root, {Rational(0), Rational(0)}, 1, 0);
    CHECK(pullback(F("x^3/(x^2+y^2)"), a) == F("u/(1+v^2)", uv()));
    CHECK(pullback(F("x^3/(x^2+y^2)"), b) == F("u^3*v/(1+u^2)", uv()));
    CHECK(pullback(F("x*y/(x^2+y^2)"), a) == F("v/(1+v^2)", uv()));
}

TEST_CASE("property: chart maps compose exactly on random trees of depth <= 3") {
    Rng rng(61);
    for (int iter = 0; iter < 40; ++iter) {
        Chart c = root_chart();
        int next_id = 1, next_comp = 0;
        RatFun f(rng.poly(xy(), 3, 2), rng.nonzero_poly(xy(), 2, 2));
        for (int depth = 0; depth < 3; ++depth) {
            Point2 center{rng.rational(2), rng.rational(2)};
            auto [a, b] = blowup_point(c, center, next_id, next_comp++);
            next_id += 2;
            Chart child = (rng.uniform(0, 1) == 0) ? a : b;
            // composing the substitution manually must equal the stored map
            Poly uu = Poly::variable(uv(), 0), vv = Poly::variable(uv(), 1);
            Poly one = Poly::constant(uv(), 1);
            std::vector<Poly> step;
            if (child.which == 1)
                step = {one * center[0] + uu, one * center[1] + uu * vv};
            else
                step = {one * center[0] + uu * vv, one * center[1] + vv};
            CHECK(child.map_to_root[0] == c.map_to_root[0].substitute(step));
            CHECK(child.map_to_root[1] == c.map_to_root[1].substitute(step));
            try {
                CHECK(pullback(f, child) ==
                      pullback(f, c).substitute({RatFun::from_poly(step[0]),
                                                 RatFun::from_poly(step[1])}));
            } catch (const Error&) {
                // denominator collapsed along this branch; skip
            }
            c = child;
        }
    }
}

TEST_CASE("resolve: x^3/(x^2+y^2) resolves at depth 1 with 2 leaves") {
    auto t = resolve_indeterminacy2(F("x^3/(x^2+y^2)"));
    CHECK(t.status == ResolutionStatus::Resolved);
    CHECK(t.depth == 1);
    CHECK(t.leaves().size() == 2);
    CHECK(t.analysis_complete);
}

TEST_CASE("resolve: genuine pole at (1,0) is detected on the exceptional") {
    // num(1,0) = 1 != 0: the function blows up at (1,0); the pullback
    // denominator vanishes along the whole exceptional there
    auto t = resolve_indeterminacy2(F("(x^2+y^2)/(x^2*(x-1)^2+y^2)"));
    CHECK(t.status == ResolutionStatus::PoleCurve);
    CHECK(!t.pole_evidence.empty());
    CHECK(t.root_points.size() == 2);

    Verdict v = decide_regulous2(F("(x^2+y^2)/(x^2*(x-1)^2+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::NotRegulous);
    REQUIRE(v.infinite_witness.has_value());
    CHECK(arc_limit(F("(x^2+y^2)/(x^2*(x-1)^2+y^2)"), v.infinite_witness->a).is_infinite());
}

TEST_CASE("resolve_at_point: the subtree over (0,0) resolves cleanly") {
    auto t = resolve_at_point(F("(x^2+y^2)/(x^2*(x-1)^2+y^2)"), {Rational(0), Rational(0)});
    CHECK(t.status == ResolutionStatus::Resolved);
    CHECK(t.depth == 1);
    CHECK(t.leaves().size() == 2);
}

TEST_CASE("resolve: pole curve status") {
    auto t = resolve_indeterminacy2(F("(x+y)/(x-y)"));
    CHECK(t.status == ResolutionStatus::PoleCurve);
}

TEST_CASE("resolve: non-rational centers reported") {
    auto t = resolve_indeterminacy2(F("1/((x^2-2)^2+y^2)"));
    CHECK(t.status == ResolutionStatus::NonrationalCenter);
}

TEST_CASE("fiber_values: worked examples") {
    Point2 origin{Rational(0), Rational(0)};

    auto t1 = resolve_indeterminacy2(F("x^3/(x^2+y^2)"));
    auto f1 = fiber_values(t1, origin);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].constant);
    CHECK(f1[0].value == Rational(0));
    CHECK(f1[0].copies.size() == 2); // both creation charts report the component

    auto t3 = resolve_at_point(F("(x^2+y^2)/(x^2*(x-1)^2+y^2)"), origin);
    auto f3 = fiber_values(t3, origin);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].constant);
    CHECK(f3[0].value == Rational(1));
}

TEST_CASE("fiber_values: non-constant fiber of x*y/(x^2+y^2)") {
    auto t = resolve_indeterminacy2(F("x*y/(x^2+y^2)"));
    REQUIRE(t.status == ResolutionStatus::Resolved);
    auto f = fiber_values(t, {Rational(0), Rational(0)});
    REQUIRE(f.size() == 1);
    CHECK(!f[0].constant);
    bool saw_nonconstant_restriction = false;
    for (const auto& cp : f[0].copies)
        saw_nonconstant_restriction |= !cp.restriction.is_constant();
    CHECK(saw_nonconstant_restriction);
}

TEST_CASE("decide: x^3/(x^2+y^2) is 0-regulous with value 0, not 1-regulous") {
    RatFun f = F("x^3/(x^2+y^2)");
    Verdict v0 = decide_regulous2(f, 0);
    REQUIRE(v0.tag == Verdict::Tag::Regulous);
    REQUIRE(v0.values.size() == 1);
    CHECK(v0.values.at({Rational(0), Rational(0)}) == Rational(0));

    Verdict v1 = decide_regulous2(f, 1);
    REQUIRE(v1.tag == Verdict::Tag::NotRegulous);
    REQUIRE(v1.arc_witness.has_value());
    // the witness re-verifies independently via arc_limit
    Jet j = jet(f, 1);
    const RatFun& coeff = j.coeffs.at(v1.arc_witness->coeff_index);
    ExtValue la = arc_limit(coeff, v1.arc_witness->a);
    ExtValue lb = arc_limit(coeff, v1.arc_witness->b);
    CHECK(la == v1.arc_witness->limit_a);
    CHECK(lb == v1.arc_witness->limit_b);
    CHECK(!(la == lb));
}

TEST_CASE("decide: x^4/(x^2+y^2) is 1-regulous") {
    Verdict v = decide_regulous2(F("x^4/(x^2+y^2)"), 1);
    CHECK(v.tag == Verdict::Tag::Regulous);
}

TEST_CASE("decide: x*y/(x^2+y^2) is not 0-regulous, witness verifies") {
    Verdict v = decide_regulous2(F("x*y/(x^2+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::NotRegulous);
    REQUIRE(v.arc_witness.has_value());
    RatFun f = F("x*y/(x^2+y^2)");
    CHECK(!(arc_limit(f, v.arc_witness->a) == arc_limit(f, v.arc_witness->b)));
}

TEST_CASE("decide: 1/(x^2+y^2) refuted by an infinite limit") {
    Verdict v = decide_regulous2(F("1/(x^2+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::NotRegulous);
    REQUIRE(v.infinite_witness.has_value());
    CHECK(arc_limit(F("1/(x^2+y^2)"), v.infinite_witness->a).is_infinite());
}

TEST_CASE("decide: cubic-example function, value 1 at the origin") {
    Verdict v = decide_regulous2(F("(y^2+x^2-x^3)/(x^2+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::Regulous);
    CHECK(v.values.at({Rational(0), Rational(0)}) == Rational(1));
}

TEST_CASE("decide: polynomials are regulous at any k") {
    CHECK(decide_regulous2(F("x+y"), 3).tag == Verdict::Tag::Regulous);
}

TEST_CASE("decide: hidden pole curve stays Unknown, never Regulous") {
    Verdict v = decide_regulous2(F("1/(y-(x-10)^3)"), 0);
    CHECK(v.tag != Verdict::Tag::Regulous);
}

TEST_CASE("kmax: canonical family x^(3+k)/(x^2+y^2)") {
    KmaxResult r0 = kmax(F("x^3/(x^2+y^2)"), 4);
    REQUIRE(r0.tag == KmaxResult::Tag::Value);
    CHECK(r0.k == 0);

    KmaxResult r2 = kmax(F("x^5/(x^2+y^2)"), 4);
    REQUIRE(r2.tag == KmaxResult::Tag::Value);
    CHECK(r2.k == 2);

    KmaxResult rp = kmax(F("x+y"), 4);
    CHECK(rp.tag == KmaxResult::Tag::AtLeastCap);
}

TEST_CASE("soundness: certified values match arc limits through the point") {
    Verdict v = decide_regulous2(F("(y^2+x^2-x^3)/(x^2+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::Regulous);
    RatFun f = F("(y^2+x^2-x^3)/(x^2+y^2)");
    for (const auto& [p, val] : v.values) {
        for (const auto& arc : default_battery2(p, Int(2))) {
            ExtValue lim;
            try {
                lim = arc_limit(f, arc);
            } catch (const Error&) {
                continue;
            }
            CHECK(lim == ExtValue::finite(val));
        }
    }
}

TEST_CASE("thinfregestreg at desk scale: functions with indeterminacy have finite kmax") {
    for (const char* s : {"x^3/(x^2+y^2)", "x^4/(x^2+y^2)", "x^5/(x^2+y^2)",
                          "(y^2+x^2-x^3)/(x^2+y^2)", "x^2*y/(x^2+y^2)"}) {
        KmaxResult r = kmax(F(s), 6);
        CHECK(r.tag == KmaxResult::Tag::Value); // a failing level was found
    }
}

TEST_CASE("resolved trees: leaf denominators have no zeros on tracked lines") {
    for (const char* s :
         {"x^3/(x^2+y^2)", "((x^2+y^2)*((x-1)^2+y^2))^2/(x^2*(x-1)^2+y^2)",
          "x^5/(x^2+y^2)^2"}) {
        auto t = resolve_indeterminacy2(F(s));
        REQUIRE(t.status == ResolutionStatus::Resolved);
        for (int leaf : t.leaves()) {
            const Chart& ch = t.charts[static_cast<std::size_t>(leaf)];
            for (const auto& l : ch.lines) {
                std::size_t axis = (l.axis == 'u') ? 0 : 1;
                Poly r = ch.pullback.den().substitute_value(axis, l.offset);
                REQUIRE(!r.is_zero());
                CHECK(r.to_univariate(1 - axis).count_real_roots() == 0);
            }
        }
    }
}

TEST_CASE("stratify2: worked examples") {
    Stratification2 s = stratify2(F("x^3/(x^2+y^2)"));
    CHECK(s.open_stratum_den == P("x^2+y^2"));
    REQUIRE(s.point_strata.size() == 1);
    CHECK(s.point_strata[0].second == Rational(0));
    // the point strata are exactly the candidate zeros of the denominator
    auto rep = indeterminacy_candidates(F("x^3/(x^2+y^2)"));
    REQUIRE(rep.rational_points.size() == s.point_strata.size());
    CHECK(rep.rational_points[0] == s.point_strata[0].first);

    Stratification2 sp = stratify2(F("x^2-y"));
    CHECK(sp.point_strata.empty());

    Stratification2 sc = stratify2(F("(y^2+x^2-x^3)/(x^2+y^2)"));
    REQUIRE(sc.point_strata.size() == 1);
    CHECK(sc.point_strata[0].first == Point2{Rational(0), Rational(0)});
    CHECK(sc.point_strata[0].second == Rational(1));

    CHECK_THROWS(stratify2(F("x*y/(x^2+y^2)")));
}

TEST_CASE("refute_by_arcs: worked examples") {
    Point2 origin{Rational(0), Rational(0)};
    auto battery = default_battery2(origin, Int(3));

    auto w1 = refute_by_arcs(F("x*y/(x^2+y^2)"), battery);
    REQUIRE(w1.has_value());
    CHECK(w1->b.has_value());

    auto w2 = refute_by_arcs(F("x^3/(x^2+y^2)"), battery);
    CHECK(!w2.has_value());

    auto w3 = refute_by_arcs(F("1/(x^2+y^2)"), battery);
    REQUIRE(w3.has_value());
    CHECK(!w3->b.has_value());
    CHECK(w3->limit_a.is_infinite());
}

TEST_CASE("deep resolution: x^5/(x^4+y^2) resolves at depth 2") {
    // |x|^5/(x^4+y^2) <= max(|x|, |y|^(1/2)) near the origin: continuous
    auto t = resolve_indeterminacy2(F("x^5/(x^4+y^2)"));
    REQUIRE(t.status == ResolutionStatus::Resolved);
    CHECK(t.depth == 2);
    Verdict v = decide_regulous2(F("x^5/(x^4+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::Regulous);
    CHECK(v.values.at({Rational(0), Rational(0)}) == Rational(0));

    // but the first derivative has direction-dependent limits
    KmaxResult km = kmax(F("x^5/(x^4+y^2)"), 3);
    REQUIRE(km.tag == KmaxResult::Tag::Value);
    CHECK(km.k == 0);
}

TEST_CASE("deep resolution: x^7/(x^6+y^2) resolves at depth 3") {
    auto t = resolve_indeterminacy2(F("x^7/(x^6+y^2)"));
    REQUIRE(t.status == ResolutionStatus::Resolved);
    CHECK(t.depth == 3);
    Verdict v = decide_regulous2(F("x^7/(x^6+y^2)"), 0);
    CHECK(v.tag == Verdict::Tag::Regulous);
}

TEST_CASE("hidden pole found at depth 2: x^3/(x^4+y^2)") {
    // along (t, 0) the function is 1/t: the pole shows up on the second
    // exceptional, not at the root level
    auto t = resolve_indeterminacy2(F("x^3/(x^4+y^2)"));
    CHECK(t.status == ResolutionStatus::PoleCurve);
    CHECK(!t.pole_evidence.empty());
    Verdict v = decide_regulous2(F("x^3/(x^4+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::NotRegulous);
    REQUIRE(v.infinite_witness.has_value());
    CHECK(arc_limit(F("x^3/(x^4+y^2)"), v.infinite_witness->a).is_infinite());
}

TEST_CASE("deep refutation: y^2/(x^4+y^2) caught on the second exceptional") {
    // limits 0 along (t, 0) but 1 along (0, t)
    Verdict v = decide_regulous2(F("y^2/(x^4+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::NotRegulous);
    REQUIRE(v.arc_witness.has_value());
    RatFun f = F("y^2/(x^4+y^2)");
    CHECK(!(arc_limit(f, v.arc_witness->a) == arc_limit(f, v.arc_witness->b)));
}

TEST_CASE("budget exhaustion stays honest") {
    Budget tiny;
    tiny.max_depth = 2;
    auto t = resolve_indeterminacy2(F("x^7/(x^6+y^2)"), tiny);
    CHECK(t.status == ResolutionStatus::BudgetExceeded);
    Verdict v = decide_regulous2(F("x^7/(x^6+y^2)"), 0, tiny);
    CHECK(v.tag == Verdict::Tag::Unknown);
}

TEST_CASE("decide_at_point: localized verdicts") {
    // (x^2+y^2)/p is regulous at (0,0) with value 1 but has a pole at (1,0)
    RatFun s1 = F("(x^2+y^2)/(x^2*(x-1)^2+y^2)");
    Verdict at0 = decide_at_point(s1, {Rational(0), Rational(0)}, 0);
    REQUIRE(at0.tag == Verdict::Tag::Regulous);
    CHECK(at0.values.at({Rational(0), Rational(0)}) == Rational(1));

    Verdict whole = decide_regulous2(s1, 0);
    CHECK(whole.tag == Verdict::Tag::NotRegulous);
}
