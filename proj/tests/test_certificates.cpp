#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include "regulous/certificates.hpp"
#include "regulous/expr.hpp"

using namespace regulous;
using testutil::F;
using testutil::P;
using testutil::Rng;
using testutil::xy;

namespace {

ExprPtr E(const std::string& s, std::vector<std::string> vars = testutil::xy()) {
    return parse_expr(s, vars);
}

} // namespace

TEST_CASE("certify: polynomials and composites over 3 variables") {
    auto v = certify_regulous(E("x^2*y - z^3 + 1", testutil::xyz()), 2);
    CHECK(v.tag == Verdict::Tag::Regulous);
}

TEST_CASE("certify: Cartan canopy z - x^3/(x^2+y^2) is 0-regulous") {
    auto v = certify_regulous(E("z - x^3/(x^2+y^2)", testutil::xyz()), 0);
    CHECK(v.tag == Verdict::Tag::Regulous);
}

TEST_CASE("certify: horned-umbrella function is honestly Unknown") {
    // z^2 * s/(x^2+y^4+y^2 z^4) with s = x^2+y^4+y^2z^4+y^3z^3-2y^3z^2
    auto e = E("z^2*(x^2+y^4+y^2*z^4+y^3*z^3-2*y^3*z^2)/(x^2+y^4+y^2*z^4)", testutil::xyz());
    auto v = certify_regulous(e, 0);
    CHECK(v.tag == Verdict::Tag::Unknown);
}

TEST_CASE("certify: division by a positive polynomial") {
    auto v = certify_regulous(E("(x+y+z)/(x^2+y^2+z^2+1)", testutil::xyz()), 1);
    CHECK(v.tag == Verdict::Tag::Regulous);
}

TEST_CASE("certify: radreel pattern composed with certified maps") {
    // x^3/(x^2+y^2) applied to (f1, f2) = (x*z, y*z): 0-regulous composition
    RatFun inner = F("x^3/(x^2+y^2)");
    auto f1 = E("x*z", testutil::xyz());
    auto f2 = E("y*z", testutil::xyz());
    auto v = certify_regulous(Expr::compose2(inner, f1, f2), 0);
    CHECK(v.tag == Verdict::Tag::Regulous);
}

TEST_CASE("certify: non-regulous planar leaves are refuted with arcs") {
    auto v = certify_regulous(E("x*y/(x^2+y^2)"), 0);
    REQUIRE(v.tag == Verdict::Tag::NotRegulous);
    REQUIRE(v.arc_witness.has_value());
}

TEST_CASE("radical_generator: sum of squares") {
    auto gen = radical_generator({E("x"), E("y")});
    CHECK(expr_to_ratfun(*gen) == F("x^2+y^2"));
    auto one = radical_generator({E("x-y")});
    CHECK(expr_to_ratfun(*one) == F("(x-y)^2"));

    // membership in Z(sum f_i^2) agrees with simultaneous vanishing
    Rng rng(67);
    int checked = 0;
    while (checked < 200) {
        Poly f1 = rng.poly(xy(), 2, 2), f2 = rng.poly(xy(), 2, 2);
        auto pt = rng.point(2);
        RatFun s = expr_to_ratfun(
            *radical_generator({parse_expr(f1.to_string(), xy()), parse_expr(f2.to_string(), xy())}));
        bool both_zero = f1.evaluate(pt) == 0 && f2.evaluate(pt) == 0;
        CHECK((s.evaluate(pt) == 0) == both_zero);
        CHECK(s.evaluate(pt) >= 0);
        ++checked;
    }
}

TEST_CASE("loja_exponent: the quadratic pair gives N = 2 at k = 0") {
    auto res = loja_exponent(F("x^2+y^2"), F("1/(x^2+2*y^2)"), 0, 8);
    REQUIRE(res.cert.has_value());
    CHECK(res.cert->N == 2);
    CHECK(res.cert->M == 2);
    CHECK(res.cert->h == F("(x^2+y^2)^2/(x^2+2*y^2)"));
    CHECK(verify_loja(*res.cert));
}

TEST_CASE("loja_exponent: N grows strictly with k (exponent built as M + k)") {
    std::vector<int> ns;
    for (int k = 0; k <= 2; ++k) {
        auto res = loja_exponent(F("x^2+y^2"), F("1/(x^2+2*y^2)"), k, 12);
        REQUIRE(res.cert.has_value());
        ns.push_back(res.cert->N);
        CHECK(verify_loja(*res.cert));
    }
    CHECK(ns[0] < ns[1]);
    CHECK(ns[1] < ns[2]);
}

TEST_CASE("loja_exponent: large k runs out of a moderate cap") {
    auto res = loja_exponent(F("x^2+y^2"), F("1/(x^2+2*y^2)"), 6, 5);
    CHECK(!res.cert.has_value());
}

TEST_CASE("loja_exponent: g already regulous gives N = 0") {
    auto res = loja_exponent(F("x"), F("1"), 0, 4);
    REQUIRE(res.cert.has_value());
    CHECK(res.cert->N == 0);
}

TEST_CASE("loja_exponent: pole along Z(f) forces divisibility (f = x, g = 1/x)") {
    auto res = loja_exponent(F("x"), F("1/x"), 0, 6);
    REQUIRE(res.cert.has_value());
    CHECK(res.cert->N == 2); // h = x vanishes on the line x = 0
    CHECK(res.cert->h == F("x"));
    CHECK(verify_loja(*res.cert));
}

TEST_CASE("loja monotonicity: success at N implies success at N + 1") {
    auto res = loja_exponent(F("x^2+y^2"), F("1/(x^2+2*y^2)"), 0, 8);
    REQUIRE(res.cert.has_value());
    for (int extra = 1; extra <= 2; ++extra) {
        RatFun h = res.cert->f.pow(res.cert->N + extra) * res.cert->g;
        CHECK(decide_regulous2(h, 0).tag == Verdict::Tag::Regulous);
    }
}

TEST_CASE("radical_membership: x in Rad(x^2+y^2) with N = 3") {
    auto res = radical_membership(F("x"), F("x^2+y^2"), 0, 6);
    REQUIRE(res.tag == RadicalResult::Tag::Certified);
    CHECK(res.cert->N == 3);
    CHECK(res.cert->h == F("x^3/(x^2+y^2)"));
    CHECK(verify_radical(*res.cert));

    // tampered certificate with N = 1 is rejected: h = x/(x^2+y^2) not regulous
    RadicalCert bad = *res.cert;
    bad.N = 1;
    bad.h = F("x/(x^2+y^2)");
    std::string why;
    CHECK(!verify_radical(bad, {}, &why));
}

TEST_CASE("radical_membership: trivial and refuted cases") {
    auto triv = radical_membership(F("x"), F("x"), 0, 4);
    REQUIRE(triv.tag == RadicalResult::Tag::Certified);
    CHECK(triv.cert->N == 1);
    CHECK(triv.cert->h == F("1"));

    auto ref = radical_membership(F("x"), F("y"), 0, 4);
    REQUIRE(ref.tag == RadicalResult::Tag::Refuted);
    // the refutation point satisfies g = 0 and f != 0
    std::vector<Rational> pt{ref.refutation_point[0], ref.refutation_point[1]};
    CHECK(F("y").evaluate(pt) == 0);
    CHECK(F("x").evaluate(pt) != 0);
}

TEST_CASE("radical coherence: certificates and refutations never coexist") {
    // if a refutation point exists no exponent can work, by the identity
    for (const char* fg : {"y", "x-y", "x*y"}) {
        auto res = radical_membership(F("x"), F(fg), 0, 4);
        CHECK(res.tag == RadicalResult::Tag::Refuted);
    }
}

TEST_CASE("verify_nss_certificate: worked examples") {
    // trivial: target f, generators (f), N = 1, h_1 = 1
    NssCert triv;
    triv.vars = xy();
    triv.target = E("x^2+y^2");
    triv.generators = {E("x^2+y^2")};
    triv.multipliers = {E("1")};
    triv.N = 1;
    CHECK(verify_nss_certificate(triv).valid);

    // x^3 = (x^2+y^2) * x^3/(x^2+y^2), h regulous
    NssCert good;
    good.vars = xy();
    good.target = E("x");
    good.generators = {E("x^2+y^2")};
    good.multipliers = {E("x^3/(x^2+y^2)")};
    good.N = 3;
    CHECK(verify_nss_certificate(good).valid);

    // N = 1 with h = x/(x^2+y^2): identity holds but h is not regulous
    NssCert bad;
    bad.vars = xy();
    bad.target = E("x");
    bad.generators = {E("x^2+y^2")};
    bad.multipliers = {E("x/(x^2+y^2)")};
    bad.N = 1;
    auto res = verify_nss_certificate(bad);
    CHECK(!res.valid);

    // broken identity
    NssCert broken = good;
    broken.N = 2;
    CHECK(!verify_nss_certificate(broken).valid);
}

TEST_CASE("nonmembership_by_order: the non-noetherian chain witness") {
    // gens x2^(3+k)/(x2^2+(x1-i)^2), i = 0..m; target i = m+1; line x1 = m+1
    for (int k : {0, 1}) {
        for (int m = 1; m <= 4; ++m) {
            std::vector<ExprPtr> gens;
            for (int i = 0; i <= m; ++i) {
                std::string s = "y^" + std::to_string(3 + k) + "/(y^2+(x-" + std::to_string(i) +
                                ")^2)";
                gens.push_back(E(s));
            }
            std::string st =
                "y^" + std::to_string(3 + k) + "/(y^2+(x-" + std::to_string(m + 1) + ")^2)";
            ExprPtr target = E(st);
            Arc line = parse_arc(std::to_string(m + 1) + ", t", 2);
            auto res = nonmembership_by_order(target, gens, line);
            REQUIRE(res.tag == OrderResult::Tag::NonMember);
            CHECK(res.report.target_order == 1 + k);
            for (const auto& [i, o] : res.report.generator_orders) CHECK(o == 3 + k);
        }
    }
}

TEST_CASE("nonmembership_by_order: equal orders are inconclusive") {
    auto gen = E("y^3/(y^2+x^2)");
    Arc line = parse_arc("1, t", 2);
    auto res = nonmembership_by_order(gen, {gen}, line);
    CHECK(res.tag == OrderResult::Tag::Inconclusive);
}

TEST_CASE("property: certificates re-verify from scratch (randomized round trips)") {
    Rng rng(71);
    int done = 0;
    while (done < 200) {
        // random valid NSS data: target := sum h_i f_i with polynomial h_i
        Poly f1 = rng.nonzero_poly(xy(), 2, 2);
        Poly f2 = rng.nonzero_poly(xy(), 2, 2);
        Poly h1 = rng.poly(xy(), 2, 1);
        Poly h2 = rng.poly(xy(), 2, 1);
        Poly target = h1 * f1 + h2 * f2;
        if (target.is_zero()) continue;
        NssCert c;
        c.vars = xy();
        c.N = 1;
        c.target = parse_expr(target.to_string(), xy());
        c.generators = {parse_expr(f1.to_string(), xy()), parse_expr(f2.to_string(), xy())};
        c.multipliers = {parse_expr(h1.to_string(), xy()), parse_expr(h2.to_string(), xy())};
        CHECK(verify_nss_certificate(c).valid);

        // mutated multiplier breaks the identity
        NssCert broken = c;
        broken.multipliers = {parse_expr((h1 + Poly::constant(xy(), 1)).to_string(), xy()),
                              parse_expr(h2.to_string(), xy())};
        CHECK(!verify_nss_certificate(broken).valid);
        ++done;
    }
}
