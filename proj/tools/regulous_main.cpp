#include "regulous/blowup.hpp"
#include "regulous/certificates.hpp"
#include "regulous/closure.hpp"
#include "regulous/consets.hpp"
#include "regulous/expr.hpp"
#include "regulous/json_io.hpp"
#include "regulous/parser.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace regulous;

constexpr int kExitVerdict = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;

struct Common {
    std::string vars = "x,y";
    int k = 0;
    int budget_depth = 12;
    int ncap = 8;
    bool json = false;
    std::string out;
};

Budget make_budget(const Common& c) {
    Budget b;
    b.max_depth = c.budget_depth;
    return b;
}

void emit(const Common& c, const Json& j, const std::string& text) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) throw Error("cannot write to '" + c.out + "'");
        os = &file;
    }
    if (c.json)
        *os << j.dump(2) << "\n";
    else
        *os << text << "\n";
}

int verdict_exit(const Verdict& v) {
    return v.tag == Verdict::Tag::Unknown ? kExitUnknown : kExitVerdict;
}

int cmd_check(const Common& c, const std::string& expr) {
    auto vars = split_vars(c.vars);
    Verdict v;
    if (vars.size() == 2) {
        v = decide_regulous2(parse_ratfun(expr, vars), c.k, make_budget(c));
    } else {
        v = certify_regulous(parse_expr(expr, vars), c.k, make_budget(c));
    }
    emit(c, to_json(v), v.to_string());
    return verdict_exit(v);
}

int cmd_kmax(const Common& c, const std::string& expr) {
    auto vars = split_vars(c.vars);
    if (vars.size() != 2) throw Error("kmax requires exactly two variables");
    KmaxResult r = kmax(parse_ratfun(expr, vars), c.ncap, make_budget(c));
    emit(c, to_json(r), r.to_string());
    return r.tag == KmaxResult::Tag::Unknown ? kExitUnknown : kExitVerdict;
}

int cmd_resolve(const Common& c, const std::string& expr) {
    auto vars = split_vars(c.vars);
    if (vars.size() != 2) throw Error("resolve requires exactly two variables");
    ResolutionTree t = resolve_indeterminacy2(parse_ratfun(expr, vars), make_budget(c));
    std::string text = "status: " + to_string(t.status) + ", depth " + std::to_string(t.depth) +
                       ", " + std::to_string(t.charts.size()) + " charts, " +
                       std::to_string(t.root_points.size()) + " center(s)";
    if (!t.note.empty()) text += "\nnote: " + t.note;
    for (const auto& p : t.root_points) {
        if (t.status != ResolutionStatus::Resolved) break;
        text += "\nfiber over " + to_string(p) + ":";
        for (const auto& fc : fiber_values(t, p)) {
            text += "\n  component E" + std::to_string(fc.component) + ": ";
            text += fc.constant ? ("constant " + to_string(fc.value))
                                : ("non-constant " + fc.copies.front().restriction.to_string());
        }
    }
    emit(c, to_json(t), text);
    bool decided = t.status == ResolutionStatus::Resolved || t.status == ResolutionStatus::PoleCurve;
    return decided ? kExitVerdict : kExitUnknown;
}

int cmd_zeroset(const Common& c, const std::string& expr) {
    auto vars = split_vars(c.vars);
    if (vars.size() != 2) throw Error("zeroset requires exactly two variables");
    RatFun f = parse_ratfun(expr, vars);
    Verdict v = decide_regulous2(f, 0, make_budget(c));
    if (v.tag == Verdict::Tag::Unknown) {
        emit(c, to_json(v), "Unknown: " + v.reason);
        return kExitUnknown;
    }
    if (v.tag == Verdict::Tag::NotRegulous) {
        std::cerr << "input is not a regulous function: " << v.to_string() << "\n";
        return kExitUsage;
    }
    ConstructibleSet z = zero_set2(f, make_budget(c));
    emit(c, to_json(z), to_string(z));
    return kExitVerdict;
}

int cmd_stratify(const Common& c, const std::string& expr) {
    auto vars = split_vars(c.vars);
    if (vars.size() != 2) throw Error("stratify requires exactly two variables");
    RatFun f = parse_ratfun(expr, vars);
    Verdict v = decide_regulous2(f, 0, make_budget(c));
    if (v.tag == Verdict::Tag::Unknown) {
        emit(c, to_json(v), "Unknown: " + v.reason);
        return kExitUnknown;
    }
    if (v.tag == Verdict::Tag::NotRegulous) {
        std::cerr << "input is not a regulous function: " << v.to_string() << "\n";
        return kExitUsage;
    }
    Stratification2 s = stratify2(f, make_budget(c));
    std::string text = "open stratum: D(" + s.open_stratum_den.to_string() + ")";
    for (const auto& [p, val] : s.point_strata)
        text += "\npoint stratum " + to_string(p) + " with value " + to_string(val);
    emit(c, to_json(s), text);
    return kExitVerdict;
}

int cmd_loja(const Common& c, const std::string& fexpr, const std::string& gexpr) {
    auto vars = split_vars(c.vars);
    LojaResult r = loja_exponent(parse_ratfun(fexpr, vars), parse_ratfun(gexpr, vars), c.k,
                                 c.ncap, make_budget(c));
    if (!r.cert) {
        emit(c, Json{{"tag", "unknown"}, {"reason", r.reason}}, "Unknown: " + r.reason);
        return kExitUnknown;
    }
    std::string text = "N = " + std::to_string(r.cert->N) + " (M = " + std::to_string(r.cert->M) +
                       "), h = " + r.cert->h.to_string() + ", h verdict: " +
                       r.cert->h_verdict.to_string();
    emit(c, to_json(*r.cert), text);
    return kExitVerdict;
}

int cmd_radmember(const Common& c, const std::string& fexpr, const std::string& gexpr) {
    auto vars = split_vars(c.vars);
    RadicalResult r = radical_membership(parse_ratfun(fexpr, vars), parse_ratfun(gexpr, vars),
                                         c.k, c.ncap, make_budget(c));
    switch (r.tag) {
    case RadicalResult::Tag::Certified: {
        std::string text = "member: N = " + std::to_string(r.cert->N) +
                           ", h = " + r.cert->h.to_string();
        emit(c, to_json(*r.cert), text);
        return kExitVerdict;
    }
    case RadicalResult::Tag::Refuted: {
        Json j{{"tag", "refuted"}, {"point", to_json(r.refutation_point)}};
        emit(c, j, "Refuted at " + to_string(r.refutation_point) + " (g = 0 there, f is not)");
        return kExitVerdict;
    }
    case RadicalResult::Tag::Unknown: break;
    }
    emit(c, Json{{"tag", "unknown"}, {"reason", r.reason}}, "Unknown: " + r.reason);
    return kExitUnknown;
}

int cmd_nss_verify(const Common& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    Json j = Json::parse(in);
    std::string type = j.value("type", "nss");
    Budget budget = make_budget(c);
    bool valid = false;
    std::string why;
    if (type == "nss") {
        auto res = verify_nss_certificate(nss_cert_from_json(j), budget);
        valid = res.valid;
        why = res.reason;
    } else if (type == "loja") {
        valid = verify_loja(loja_cert_from_json(j), budget, &why);
    } else if (type == "radical") {
        valid = verify_radical(radical_cert_from_json(j), budget, &why);
    } else {
        throw Error("unknown certificate type '" + type + "'");
    }
    Json out{{"valid", valid}};
    if (!valid) out["reason"] = why;
    emit(c, out, valid ? "valid" : ("invalid: " + why));
    return kExitVerdict;
}

int cmd_order(const Common& c, const std::string& target, const std::vector<std::string>& gens,
              const std::string& line) {
    auto vars = split_vars(c.vars);
    std::vector<ExprPtr> gen_exprs;
    for (const auto& g : gens) gen_exprs.push_back(parse_expr(g, vars));
    OrderResult r = nonmembership_by_order(parse_expr(target, vars), gen_exprs,
                                           parse_arc(line, vars.size()));
    std::string text;
    if (r.tag == OrderResult::Tag::NonMember) {
        text = "NonMember: target order " + std::to_string(r.report.target_order) +
               " below every generator order";
    } else {
        text = "Inconclusive: " + r.reason;
    }
    emit(c, to_json(r), text);
    return r.tag == OrderResult::Tag::NonMember ? kExitVerdict : kExitUnknown;
}

int cmd_closure(const Common& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    Json j = Json::parse(in);
    ArcSymIncidence inc = incidence_from_json(j.contains("incidence") ? j.at("incidence") : j);
    ClosureResult r = closure_algorithm(inc);
    std::string text = "included:";
    for (const auto& id : r.included_ids) text += " " + id;
    text += "\npasses: " + std::to_string(r.passes);
    for (const auto& e : r.audit) {
        text += "\n  pass " + std::to_string(e.pass) + ": " + e.component + " [" + e.rule + "] ";
        text += e.included ? "included" : "not included";
        if (!e.added.empty()) {
            text += ", added";
            for (const auto& a : e.added) text += " " + a;
        }
    }
    emit(c, to_json(r), text);
    return kExitVerdict;
}

// --- mesh emission ----------------------------------------------------------

double to_double(const Rational& r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

int cmd_mesh(const Common& c, const std::string& expr, const std::string& region, int res,
             bool exact) {
    auto vars = split_vars(c.vars);
    if (c.out.empty()) throw Error("mesh requires --out");
    std::ofstream file(c.out);
    if (!file) throw Error("cannot write to '" + c.out + "'");

    std::vector<Rational> box; // xmin,xmax,ymin,ymax
    for (const auto& part : split_vars(region)) {
        Rational r;
        auto slash = part.find('/');
        if (slash == std::string::npos)
            r = Rational(Int(part));
        else
            r = Rational(Int(part.substr(0, slash)), Int(part.substr(slash + 1)));
        box.push_back(r);
    }
    if (box.size() != 4) throw Error("--region expects xmin,xmax,ymin,ymax");
    if (res < 1) throw Error("--res must be positive");

    auto print_row = [&](const Rational& x, const Rational& y, const Rational& z) {
        if (exact)
            file << to_string(x) << "," << to_string(y) << "," << to_string(z) << "\n";
        else
            file << to_double(x) << "," << to_double(y) << "," << to_double(z) << "\n";
    };
    file << vars[0] << "," << vars[1] << ",value\n";

    if (vars.size() == 2) {
        RatFun f = parse_ratfun(expr, vars);
        // extension values at indeterminacy points, when certified
        std::map<Point2, Rational> ext;
        Verdict v = decide_regulous2(f, 0, make_budget(c));
        if (v.tag == Verdict::Tag::Regulous) ext = v.values;
        for (int i = 0; i <= res; ++i) {
            Rational x = box[0] + (box[1] - box[0]) * Rational(i, res);
            for (int j = 0; j <= res; ++j) {
                Rational y = box[2] + (box[3] - box[2]) * Rational(j, res);
                std::vector<Rational> p{x, y};
                if (f.defined_at(p)) {
                    print_row(x, y, f.evaluate(p));
                } else if (ext.count({x, y})) {
                    print_row(x, y, ext.at({x, y}));
                } // poles without a certified value are skipped
            }
        }
        return kExitVerdict;
    }
    if (vars.size() == 3) {
        // implicit surface g(x, y, z) = 0, solved for z when linear in z
        Poly g = parse_poly(expr, vars);
        if (g.degree_in(2) != 1)
            throw Error("3-variable mesh needs a surface linear in the last variable");
        Poly c1 = g.coeff_in(2, 1);
        Poly c0 = g.coeff_in(2, 0);
        for (int i = 0; i <= res; ++i) {
            Rational x = box[0] + (box[1] - box[0]) * Rational(i, res);
            for (int j = 0; j <= res; ++j) {
                Rational y = box[2] + (box[3] - box[2]) * Rational(j, res);
                std::vector<Rational> p{x, y, Rational(0)};
                Rational lead = c1.evaluate(p);
                if (lead == 0) continue;
                print_row(x, y, -c0.evaluate(p) / lead);
            }
        }
        return kExitVerdict;
    }
    throw Error("mesh supports 2 or 3 variables");
}

int cmd_fixtures(const Common& c, const std::string& dir);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for regulous (continuous rational) functions"};
    app.require_subcommand(1);
    Common common;

    std::string expr, fexpr, gexpr, file, target, line, region = "-1,1,-1,1";
    std::vector<std::string> gens;
    int res = 50;
    bool exact = false;
    std::string fixtures_dir = "fixtures";

    auto add_common = [&](CLI::App* sub, bool with_k = true) {
        sub->add_option("--vars", common.vars, "comma-separated variable names");
        if (with_k) sub->add_option("--k", common.k, "differentiability class");
        sub->add_option("--budget", common.budget_depth, "blow-up depth budget");
        sub->add_option("--ncap", common.ncap, "exponent / kmax search cap");
        sub->add_flag("--json", common.json, "machine-readable output");
        sub->add_option("--out", common.out, "write output to a file");
    };

    auto* check = app.add_subcommand("check", "decide / certify k-regulousness");
    check->add_option("expr", expr)->required();
    add_common(check);

    auto* km = app.add_subcommand("kmax", "largest certified regulousness class");
    km->add_option("expr", expr)->required();
    add_common(km, false);

    auto* rs = app.add_subcommand("resolve", "iterated blow-up resolution tree");
    rs->add_option("expr", expr)->required();
    add_common(rs, false);

    auto* zs = app.add_subcommand("zeroset", "zero set as a constructible set");
    zs->add_option("expr", expr)->required();
    add_common(zs, false);

    auto* st = app.add_subcommand("stratify", "stratification with regular restrictions");
    st->add_option("expr", expr)->required();
    add_common(st, false);

    auto* lj = app.add_subcommand("loja", "Lojasiewicz exponent certificate");
    lj->add_option("f", fexpr)->required();
    lj->add_option("g", gexpr)->required();
    add_common(lj);

    auto* rm = app.add_subcommand("radmember", "radical membership certificate");
    rm->add_option("f", fexpr)->required();
    rm->add_option("g", gexpr)->required();
    add_common(rm);

    auto* nv = app.add_subcommand("nss-verify", "verify a certificate file");
    nv->add_option("file", file)->required();
    add_common(nv);

    auto* on = app.add_subcommand("order-nonmember", "vanishing-order non-membership");
    on->add_option("--target", target)->required();
    on->add_option("--gen", gens, "generator expression (repeatable)")->required();
    on->add_option("--line", line, "arc text, e.g. \"2, t\"")->required();
    add_common(on, false);

    auto* cl = app.add_subcommand("closure", "arc-symmetric constructible closure");
    cl->add_option("file", file)->required();
    add_common(cl, false);

    auto* fx = app.add_subcommand("fixtures", "replay the recorded catalog");
    fx->add_option("--dir", fixtures_dir, "fixtures directory");
    add_common(fx, false);

    auto* ms = app.add_subcommand("mesh", "emit a height-field / surface CSV");
    ms->add_option("expr", expr)->required();
    ms->add_option("--region", region, "xmin,xmax,ymin,ymax");
    ms->add_option("--res", res, "grid resolution");
    ms->add_flag("--exact", exact, "print exact rationals");
    add_common(ms, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(common, expr);
        if (km->parsed()) return cmd_kmax(common, expr);
        if (rs->parsed()) return cmd_resolve(common, expr);
        if (zs->parsed()) return cmd_zeroset(common, expr);
        if (st->parsed()) return cmd_stratify(common, expr);
        if (lj->parsed()) return cmd_loja(common, fexpr, gexpr);
        if (rm->parsed()) return cmd_radmember(common, fexpr, gexpr);
        if (nv->parsed()) return cmd_nss_verify(common, file);
        if (on->parsed()) return cmd_order(common, target, gens, line);
        if (cl->parsed()) return cmd_closure(common, file);
        if (fx->parsed()) return cmd_fixtures(common, fixtures_dir);
        if (ms->parsed()) return cmd_mesh(common, expr, region, res, exact);
    } catch (const regulous::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

namespace {

// Fixture replay: each catalog entry records an operation and the verdict
// the catalog records; exit 0 only if every entry matches.
int cmd_fixtures(const Common& c, const std::string& dir) {
    std::ifstream in(dir + "/catalog.json");
    if (!in) throw Error("cannot read '" + dir + "/catalog.json'");
    Json catalog = Json::parse(in);
    int failures = 0;
    Budget budget = make_budget(c);

    for (const auto& fx : catalog.at("fixtures")) {
        std::string id = fx.at("id").get<std::string>();
        std::string kind = fx.at("kind").get<std::string>();
        bool ok = false;
        std::string detail;
        try {
            auto vars = split_vars(fx.value("vars", "x,y"));
            const Json& expect = fx.at("expect");
            if (kind == "kmax") {
                KmaxResult r = kmax(parse_ratfun(fx.at("expr").get<std::string>(), vars),
                                    fx.value("cap", 6), budget);
                ok = (expect.at("tag") == "value" && r.tag == KmaxResult::Tag::Value &&
                      r.k == expect.at("k").get<int>()) ||
                     (expect.at("tag") == "at_least" && r.tag == KmaxResult::Tag::AtLeastCap);
                detail = r.to_string();
            } else if (kind == "check") {
                Verdict v = decide_regulous2(parse_ratfun(fx.at("expr").get<std::string>(), vars),
                                             fx.value("k", 0), budget);
                ok = to_json(v).at("tag") == expect.at("tag");
                if (ok && expect.contains("value_at_origin")) {
                    Rational want = rational_from_json(expect.at("value_at_origin"));
                    auto it = v.values.find({Rational(0), Rational(0)});
                    ok = it != v.values.end() && it->second == want;
                }
                detail = v.to_string();
            } else if (kind == "certify") {
                Verdict v = certify_regulous(parse_expr(fx.at("expr").get<std::string>(), vars),
                                             fx.value("k", 0), budget);
                ok = to_json(v).at("tag") == expect.at("tag");
                detail = v.to_string();
            } else if (kind == "loja") {
                LojaResult r = loja_exponent(parse_ratfun(fx.at("f").get<std::string>(), vars),
                                             parse_ratfun(fx.at("g").get<std::string>(), vars),
                                             fx.value("k", 0), fx.value("ncap", 8), budget);
                ok = r.cert && r.cert->N == expect.at("N").get<int>() && verify_loja(*r.cert);
                detail = r.cert ? ("N = " + std::to_string(r.cert->N)) : r.reason;
            } else if (kind == "radmember") {
                RadicalResult r =
                    radical_membership(parse_ratfun(fx.at("f").get<std::string>(), vars),
                                       parse_ratfun(fx.at("g").get<std::string>(), vars),
                                       fx.value("k", 0), fx.value("ncap", 8), budget);
                if (expect.at("tag") == "certified")
                    ok = r.tag == RadicalResult::Tag::Certified &&
                         r.cert->N == expect.at("N").get<int>() && verify_radical(*r.cert);
                else if (expect.at("tag") == "refuted")
                    ok = r.tag == RadicalResult::Tag::Refuted;
                detail = r.cert ? ("N = " + std::to_string(r.cert->N)) : r.reason;
            } else if (kind == "closure") {
                std::ifstream fin(dir + "/" + fx.at("file").get<std::string>());
                if (!fin) throw Error("missing incidence file");
                Json j = Json::parse(fin);
                ClosureResult r =
                    closure_algorithm(incidence_from_json(j.contains("incidence") ? j.at("incidence") : j));
                ok = r.included_ids == expect.at("included").get<std::vector<std::string>>() &&
                     r.passes == expect.at("passes").get<int>();
                if (ok && expect.contains("pass_of")) {
                    for (const auto& [comp, pass] : expect.at("pass_of").items()) {
                        bool found = false;
                        for (const auto& e : r.audit)
                            if (e.component == comp && e.included)
                                found = (e.pass == pass.get<int>());
                        ok = ok && found;
                    }
                }
                detail = "passes = " + std::to_string(r.passes);
            } else if (kind == "order") {
                std::vector<ExprPtr> gen_exprs;
                for (const auto& g : fx.at("gens"))
                    gen_exprs.push_back(parse_expr(g.get<std::string>(), vars));
                OrderResult r = nonmembership_by_order(
                    parse_expr(fx.at("target").get<std::string>(), vars), gen_exprs,
                    parse_arc(fx.at("line").get<std::string>(), vars.size()));
                ok = (expect.at("tag") == "non_member") ==
                     (r.tag == OrderResult::Tag::NonMember);
                if (ok && expect.contains("target_order"))
                    ok = r.report.target_order == expect.at("target_order").get<long long>();
                detail = "target order " + std::to_string(r.report.target_order);
            } else {
                detail = "unknown fixture kind";
            }
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << id;
        if (!ok) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? kExitVerdict : kExitUsage;
}

} // namespace
