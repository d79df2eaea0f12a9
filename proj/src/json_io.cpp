#include "regulous/json_io.hpp"

#include "regulous/parser.hpp"

namespace regulous {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Point2& p) { return Json::array({to_string(p[0]), to_string(p[1])}); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Json to_json(const Jet& j) {
    Json out;
    out["order"] = j.order;
    Json coeffs = Json::array();
    for (const auto& [m, f] : j.coeffs) {
        Json entry;
        entry["index"] = m.e;
        entry["num"] = f.num().to_string();
        entry["den"] = f.den().to_string();
        coeffs.push_back(std::move(entry));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

Jet jet_from_json(const Json& j, const std::vector<std::string>& vars) {
    Jet out;
    out.order = j.at("order").get<int>();
    for (const auto& entry : j.at("coeffs")) {
        Monomial m(std::vector<std::uint32_t>(entry.at("index").begin(), entry.at("index").end()));
        Poly num = parse_poly(entry.at("num").get<std::string>(), vars);
        Poly den = parse_poly(entry.at("den").get<std::string>(), vars);
        out.coeffs.emplace(m, RatFun(num, den));
    }
    return out;
}

namespace {

std::string arc_text(const Arc& a) { return a.to_string(); }

Json witness_json(const Verdict& v) {
    Json w;
    if (v.arc_witness) {
        w["type"] = "arcs";
        w["coeff_index"] = v.arc_witness->coeff_index.e;
        w["arc_a"] = arc_text(v.arc_witness->a);
        w["arc_b"] = arc_text(v.arc_witness->b);
        w["limit_a"] = v.arc_witness->limit_a.to_string();
        w["limit_b"] = v.arc_witness->limit_b.to_string();
        Json base = Json::array();
        for (const auto& c : v.arc_witness->base) base.push_back(to_string(c));
        w["base"] = std::move(base);
    } else if (v.infinite_witness) {
        w["type"] = "infinite";
        w["coeff_index"] = v.infinite_witness->coeff_index.e;
        w["arc"] = arc_text(v.infinite_witness->a);
        w["limit"] = v.infinite_witness->limit.to_string();
        Json base = Json::array();
        for (const auto& c : v.infinite_witness->base) base.push_back(to_string(c));
        w["base"] = std::move(base);
    }
    return w;
}

} // namespace

Json to_json(const Verdict& v) {
    Json out;
    switch (v.tag) {
    case Verdict::Tag::Regulous: out["tag"] = "regulous"; break;
    case Verdict::Tag::NotRegulous: out["tag"] = "not_regulous"; break;
    case Verdict::Tag::Unknown: out["tag"] = "unknown"; break;
    }
    out["k"] = v.k;
    if (!v.values.empty()) {
        Json vals = Json::array();
        for (const auto& [p, val] : v.values) {
            Json e;
            e["point"] = to_json(p);
            e["value"] = to_string(val);
            vals.push_back(std::move(e));
        }
        out["values"] = std::move(vals);
    }
    if (v.arc_witness || v.infinite_witness) out["witness"] = witness_json(v);
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

Json to_json(const KmaxResult& r) {
    Json out;
    switch (r.tag) {
    case KmaxResult::Tag::Value:
        out["tag"] = "value";
        out["k"] = r.k;
        break;
    case KmaxResult::Tag::AtLeastCap:
        out["tag"] = "at_least";
        out["k"] = r.k;
        break;
    case KmaxResult::Tag::NotRegulousAtAll: out["tag"] = "not_regulous"; break;
    case KmaxResult::Tag::Unknown:
        out["tag"] = "unknown";
        out["reason"] = r.reason;
        break;
    }
    return out;
}

Json to_json(const ResolutionTree& t) {
    Json out;
    out["status"] = to_string(t.status);
    out["depth"] = t.depth;
    out["analysis_complete"] = t.analysis_complete;
    if (!t.note.empty()) out["note"] = t.note;
    Json pts = Json::array();
    for (const auto& p : t.root_points) pts.push_back(to_json(p));
    out["root_points"] = std::move(pts);
    Json nodes = Json::array();
    for (const auto& c : t.charts) {
        Json n;
        n["id"] = c.id;
        if (c.parent >= 0) n["parent"] = c.parent;
        n["which_chart"] = c.which;
        n["center"] = to_json(c.center);
        n["pullback"] = {{"num", c.pullback.num().to_string()},
                         {"den", c.pullback.den().to_string()}};
        Json exc = Json::array();
        for (const auto& l : c.lines) {
            Json e;
            e["axis"] = std::string(1, l.axis);
            e["offset"] = to_string(l.offset);
            e["component"] = l.component;
            exc.push_back(std::move(e));
        }
        n["exceptional"] = std::move(exc);
        n["leaf"] = c.leaf;
        nodes.push_back(std::move(n));
    }
    out["nodes"] = std::move(nodes);
    return out;
}

Json to_json(const Stratification2& s) {
    Json out;
    out["open_stratum"] = {{"den", s.open_stratum_den.to_string()}};
    Json pts = Json::array();
    for (const auto& [p, val] : s.point_strata) {
        Json e;
        e["point"] = to_json(p);
        e["value"] = to_string(val);
        pts.push_back(std::move(e));
    }
    out["point_strata"] = std::move(pts);
    return out;
}

Json to_json(const ConstructibleSet& s) {
    Json out;
    out["vars"] = s.vars;
    Json pieces = Json::array();
    for (const auto& p : s.pieces) {
        Json e;
        Json eqs = Json::array(), ineqs = Json::array();
        for (const auto& q : p.equations) eqs.push_back(q.to_string());
        for (const auto& q : p.inequations) ineqs.push_back(q.to_string());
        e["equations"] = std::move(eqs);
        e["inequations"] = std::move(ineqs);
        if (p.dim) e["dim"] = *p.dim;
        pieces.push_back(std::move(e));
    }
    out["pieces"] = std::move(pieces);
    return out;
}

Json to_json(const LojaCert& c) {
    Json out;
    out["type"] = "loja";
    out["vars"] = c.f.vars();
    out["f"] = c.f.to_string();
    out["g"] = c.g.to_string();
    out["k"] = c.k;
    out["N"] = c.N;
    out["M"] = c.M;
    out["h"] = {{"num", c.h.num().to_string()}, {"den", c.h.den().to_string()}};
    Json vans;
    Json pts = Json::array();
    for (const auto& [p, val] : c.vanishing.point_values) {
        Json e;
        e["point"] = to_json(p);
        e["value"] = to_string(val);
        pts.push_back(std::move(e));
    }
    vans["points"] = std::move(pts);
    Json curves = Json::array();
    for (const auto& [w, div] : c.vanishing.curve_divisibility) {
        Json e;
        e["factor"] = w.to_string();
        e["divides"] = div;
        curves.push_back(std::move(e));
    }
    vans["curves"] = std::move(curves);
    out["vanishing"] = std::move(vans);
    return out;
}

LojaCert loja_cert_from_json(const Json& j) {
    LojaCert c;
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    c.f = parse_ratfun(j.at("f").get<std::string>(), vars);
    c.g = parse_ratfun(j.at("g").get<std::string>(), vars);
    c.k = j.at("k").get<int>();
    c.N = j.at("N").get<int>();
    c.M = j.value("M", c.N - c.k);
    c.h = RatFun(parse_poly(j.at("h").at("num").get<std::string>(), vars),
                 parse_poly(j.at("h").at("den").get<std::string>(), vars));
    return c;
}

Json to_json(const RadicalCert& c) {
    Json out;
    out["type"] = "radical";
    out["vars"] = c.f.vars();
    out["f"] = c.f.to_string();
    out["g"] = c.g.to_string();
    out["k"] = c.k;
    out["N"] = c.N;
    out["h"] = {{"num", c.h.num().to_string()}, {"den", c.h.den().to_string()}};
    return out;
}

RadicalCert radical_cert_from_json(const Json& j) {
    RadicalCert c;
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    c.f = parse_ratfun(j.at("f").get<std::string>(), vars);
    c.g = parse_ratfun(j.at("g").get<std::string>(), vars);
    c.k = j.at("k").get<int>();
    c.N = j.at("N").get<int>();
    c.h = RatFun(parse_poly(j.at("h").at("num").get<std::string>(), vars),
                 parse_poly(j.at("h").at("den").get<std::string>(), vars));
    return c;
}

Json to_json(const NssCert& c) {
    Json out;
    out["type"] = "nss";
    out["vars"] = c.vars;
    out["k"] = c.k;
    out["N"] = c.N;
    out["target"] = expr_to_ratfun(*c.target).to_string();
    Json gens = Json::array(), mults = Json::array();
    for (const auto& g : c.generators) gens.push_back(expr_to_ratfun(*g).to_string());
    for (const auto& m : c.multipliers) mults.push_back(expr_to_ratfun(*m).to_string());
    out["generators"] = std::move(gens);
    out["multipliers"] = std::move(mults);
    return out;
}

NssCert nss_cert_from_json(const Json& j) {
    NssCert c;
    c.vars = j.at("vars").get<std::vector<std::string>>();
    c.k = j.value("k", 0);
    c.N = j.at("N").get<int>();
    c.target = parse_expr(j.at("target").get<std::string>(), c.vars);
    for (const auto& g : j.at("generators"))
        c.generators.push_back(parse_expr(g.get<std::string>(), c.vars));
    for (const auto& m : j.at("multipliers"))
        c.multipliers.push_back(parse_expr(m.get<std::string>(), c.vars));
    return c;
}

Json to_json(const OrderResult& r) {
    Json out;
    out["tag"] = r.tag == OrderResult::Tag::NonMember ? "non_member" : "inconclusive";
    out["line"] = r.report.line.to_string();
    out["target_order"] = r.report.target_order;
    Json orders = Json::array();
    for (const auto& [i, o] : r.report.generator_orders) {
        Json e;
        e["generator"] = i;
        e["order"] = o;
        orders.push_back(std::move(e));
    }
    out["generator_orders"] = std::move(orders);
    if (!r.reason.empty()) out["reason"] = r.reason;
    return out;
}

Json to_json(const ClosureResult& r) {
    Json out;
    out["included"] = r.included_ids;
    out["passes"] = r.passes;
    Json audit = Json::array();
    for (const auto& e : r.audit) {
        Json a;
        a["pass"] = e.pass;
        a["component"] = e.component;
        a["rule"] = e.rule;
        a["dim_component"] = e.dim_component;
        a["dim_intersection"] = e.dim_intersection;
        a["included"] = e.included;
        if (!e.added.empty()) a["added"] = e.added;
        audit.push_back(std::move(a));
    }
    out["audit"] = std::move(audit);
    return out;
}

ArcSymIncidence incidence_from_json(const Json& j) {
    ArcSymIncidence inc;
    for (const auto& c : j.at("components"))
        inc.components.push_back({c.at("id").get<std::string>(), c.at("dim").get<int>()});
    inc.top = j.at("top").get<std::vector<std::string>>();
    for (const auto& e : j.at("table")) {
        auto cur = e.at("current").get<std::vector<std::string>>();
        std::sort(cur.begin(), cur.end());
        inc.table[{e.at("component").get<std::string>(), cur}] = e.at("dim").get<int>();
    }
    if (j.contains("refinement")) {
        for (const auto& e : j.at("refinement")) {
            auto cur = e.at("current").get<std::vector<std::string>>();
            std::sort(cur.begin(), cur.end());
            std::vector<ArcSymIncidence::Component> adds;
            for (const auto& a : e.at("adds"))
                adds.push_back({a.at("id").get<std::string>(), a.at("dim").get<int>()});
            inc.refinement[{e.at("component").get<std::string>(), cur}] = std::move(adds);
        }
    }
    return inc;
}

} // namespace regulous
