#include "regulous/certificates.hpp"

#include "regulous/zeroset.hpp"

namespace regulous {

namespace {

// Certified 1-dimensional components of Z(f) along which g has poles; the
// zero-extension of f^N g must vanish on these, checked by divisibility.
std::vector<Poly> pole_carrying_curves(const RatFun& f, const RatFun& g) {
    std::vector<Poly> out;
    if (f.is_zero() || f.num().is_constant()) return out;
    PlaneZeroAnalysis a = analyze_plane_zeros(f.num());
    for (const auto& w : a.curve_factors)
        if (divides(w, g.den())) out.push_back(w);
    return out;
}

// The zero-extension conditions for one reduced h = f^M * dg: certified
// 0-regulous, extension values zero at the indeterminacy points (all inside
// Z(f)), and numerator divisible by the pole-carrying curve factors.
bool extension_vanishes(const RatFun& h, const RatFun& f, const std::vector<Poly>& curves,
                        const Budget& budget, VanishingReport* report, std::string* why) {
    Verdict v = decide_regulous2(h, 0, budget);
    if (v.tag != Verdict::Tag::Regulous) {
        if (why) *why = "not 0-regulous: " + v.to_string();
        return false;
    }
    for (const auto& [pt, val] : v.values) {
        if (report) report->point_values.emplace_back(pt, val);
        if (val != 0) {
            if (why) *why = "extension value " + to_string(val) + " at " + to_string(pt);
            return false;
        }
        if (f.defined_at({pt[0], pt[1]}) && f.evaluate({pt[0], pt[1]}) != 0) {
            if (why) *why = "indeterminacy point " + to_string(pt) + " is not in Z(f)";
            return false;
        }
    }
    for (const auto& w : curves) {
        bool div = h.is_zero() || divides(w, h.num());
        if (report) report->curve_divisibility.emplace_back(w, div);
        if (!div) {
            if (why) *why = "numerator not divisible by the curve factor " + w.to_string();
            return false;
        }
    }
    return true;
}

} // namespace

LojaResult loja_exponent(const RatFun& f, const RatFun& g, int k, int n_cap,
                         const Budget& budget) {
    LojaResult res;
    if (f.nvars() != 2) {
        res.reason = "only plane functions are decidable here";
        return res;
    }
    if (f.is_zero()) {
        res.reason = "f is the zero function";
        return res;
    }
    Jet jg = jet(g, k);
    std::vector<Poly> curves = pole_carrying_curves(f, g);

    int m_cap = std::max(n_cap - k, 0);
    for (int M = 0; M <= m_cap; ++M) {
        RatFun fM = f.pow(static_cast<std::uint64_t>(M));
        bool ok = true;
        std::string why;
        for (const auto& [index, dg] : jg.coeffs) {
            if (dg.is_zero()) continue;
            RatFun h = fM * dg;
            if (!extension_vanishes(h, f, curves, budget, nullptr, &why)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        LojaCert cert;
        cert.f = f;
        cert.g = g;
        cert.k = k;
        cert.M = M;
        cert.N = M + k;
        cert.h = f.pow(static_cast<std::uint64_t>(cert.N)) * g;
        cert.h_verdict = decide_regulous2(cert.h, k, budget);
        if (cert.h_verdict.tag != Verdict::Tag::Regulous) continue;
        cert.vanishing.ok =
            extension_vanishes(cert.h, f, curves, budget, &cert.vanishing, nullptr);
        if (!cert.vanishing.ok) continue;
        res.cert = std::move(cert);
        return res;
    }
    res.reason = "no exponent within the cap N <= " + std::to_string(n_cap);
    return res;
}

bool verify_loja(const LojaCert& c, const Budget& budget, std::string* why) {
    RatFun expected = c.f.pow(static_cast<std::uint64_t>(c.N)) * c.g;
    if (!(expected == c.h)) {
        if (why) *why = "identity f^N * g = h fails";
        return false;
    }
    Verdict v = decide_regulous2(c.h, c.k, budget);
    if (v.tag != Verdict::Tag::Regulous) {
        if (why) *why = "h is not certified " + std::to_string(c.k) + "-regulous";
        return false;
    }
    std::vector<Poly> curves = pole_carrying_curves(c.f, c.g);
    std::string inner;
    if (!extension_vanishes(c.h, c.f, curves, budget, nullptr, &inner)) {
        if (why) *why = "zero-extension fails: " + inner;
        return false;
    }
    return true;
}

namespace {

std::optional<Point2> find_refutation_point(const RatFun& f, const RatFun& g) {
    if (g.is_zero()) throw Error("radical_membership: g is the zero function");
    if (g.num().is_constant()) return std::nullopt; // Z(g) empty
    PlaneZeroAnalysis a = analyze_plane_zeros(g.num());
    std::vector<Point2> candidates = a.points;
    for (const auto& w : a.curve_factors)
        for (const auto& p : sample_curve_points(w, Int(3))) candidates.push_back(p);
    if (!a.complete) {
        // salvage a few extra samples from sign changes of the numerator
        for (const auto& p : sample_curve_points(squarefree_part(g.num()), Int(3)))
            candidates.push_back(p);
    }
    for (const auto& p : candidates) {
        std::vector<Rational> pt{p[0], p[1]};
        if (!g.defined_at(pt) || g.evaluate(pt) != 0) continue;
        if (f.defined_at(pt) && f.evaluate(pt) != 0) return p;
    }
    return std::nullopt;
}

} // namespace

RadicalResult radical_membership(const RatFun& f, const RatFun& g, int k, int n_cap,
                                 const Budget& budget) {
    RadicalResult res;
    if (f.nvars() != 2) {
        res.reason = "only plane functions are decidable here";
        return res;
    }
    if (auto bad = find_refutation_point(f, g)) {
        res.tag = RadicalResult::Tag::Refuted;
        res.refutation_point = *bad;
        return res;
    }
    for (int N = 0; N <= n_cap; ++N) {
        RatFun h = f.pow(static_cast<std::uint64_t>(N)) / g;
        Verdict v = decide_regulous2(h, k, budget);
        if (v.tag != Verdict::Tag::Regulous) continue;
        RadicalCert cert;
        cert.f = f;
        cert.g = g;
        cert.k = k;
        cert.N = N;
        cert.h = h;
        cert.h_verdict = v;
        res.tag = RadicalResult::Tag::Certified;
        res.cert = std::move(cert);
        return res;
    }
    res.reason = "no exponent within the cap N <= " + std::to_string(n_cap);
    return res;
}

bool verify_radical(const RadicalCert& c, const Budget& budget, std::string* why) {
    RatFun lhs = c.f.pow(static_cast<std::uint64_t>(c.N));
    if (!(lhs == c.g * c.h)) {
        if (why) *why = "identity f^N = g * h fails";
        return false;
    }
    Verdict v = decide_regulous2(c.h, c.k, budget);
    if (v.tag != Verdict::Tag::Regulous) {
        if (why) *why = "h is not certified " + std::to_string(c.k) + "-regulous";
        return false;
    }
    return true;
}

NssVerifyResult verify_nss_certificate(const NssCert& c, const Budget& budget) {
    NssVerifyResult res;
    if (c.generators.size() != c.multipliers.size()) {
        res.reason = "generator/multiplier count mismatch";
        return res;
    }
    if (c.generators.empty()) {
        res.reason = "no generators";
        return res;
    }
    RatFun target = expr_to_ratfun(*c.target);
    RatFun acc = RatFun::constant(target.vars(), 0);
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        acc = acc + expr_to_ratfun(*c.multipliers[i]) * expr_to_ratfun(*c.generators[i]);
    RatFun residue = target.pow(static_cast<std::uint64_t>(c.N)) - acc;
    if (!residue.is_zero()) {
        res.reason = "identity f^N = sum h_i f_i fails (residue " + residue.to_string() + ")";
        return res;
    }
    for (std::size_t i = 0; i < c.multipliers.size(); ++i) {
        Verdict v = certify_regulous(c.multipliers[i], c.k, budget);
        if (v.tag != Verdict::Tag::Regulous) {
            res.reason = "multiplier h_" + std::to_string(i + 1) +
                         " is not certified regulous: " + v.to_string();
            return res;
        }
    }
    res.valid = true;
    return res;
}

OrderResult nonmembership_by_order(const ExprPtr& target, const std::vector<ExprPtr>& gens,
                                   const Arc& line) {
    OrderResult res;
    res.report.line = line;

    auto order_of = [&](const RatFun& f) -> std::optional<long long> {
        RatFun r = restrict_to_arc(f, line); // throws if inside the pole locus
        if (r.is_zero()) return std::nullopt;
        UniPoly n = r.num().to_univariate(0);
        UniPoly d = r.den().to_univariate(0);
        if (d.valuation() != 0)
            throw Error("restriction has a pole at t = 0; line is not admissible");
        return static_cast<long long>(n.valuation());
    };

    auto t_ord = order_of(expr_to_ratfun(*target));
    if (!t_ord) {
        res.reason = "target restricts to zero on the line";
        return res;
    }
    res.report.target_order = *t_ord;

    std::optional<long long> min_gen;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto o = order_of(expr_to_ratfun(*gens[i]));
        if (!o) continue; // identically-zero restrictions are skipped
        res.report.generator_orders.emplace_back(i, *o);
        if (!min_gen || *o < *min_gen) min_gen = *o;
    }
    if (!min_gen) {
        res.reason = "every generator restricts to zero on the line";
        return res;
    }
    if (res.report.target_order < *min_gen) {
        res.tag = OrderResult::Tag::NonMember;
        return res;
    }
    res.reason = "target order " + std::to_string(res.report.target_order) +
                 " is not below the minimal generator order " + std::to_string(*min_gen);
    return res;
}

} // namespace regulous
