#include "regulous/consets.hpp"

#include "regulous/zeroset.hpp"

#include <sstream>

namespace regulous {

ConstructibleSet conset_empty(std::vector<std::string> vars) {
    ConstructibleSet s;
    s.vars = std::move(vars);
    return s;
}

ConstructibleSet conset_universe(std::vector<std::string> vars) {
    ConstructibleSet s;
    s.vars = std::move(vars);
    s.pieces.push_back(ConPiece{});
    return s;
}

ConstructibleSet conset_zero(const Poly& p) {
    ConstructibleSet s;
    s.vars = p.vars();
    ConPiece piece;
    piece.equations.push_back(p);
    s.pieces.push_back(std::move(piece));
    return normalize(std::move(s));
}

ConstructibleSet conset_point(const std::vector<std::string>& vars,
                              const std::vector<Rational>& point) {
    if (vars.size() != point.size()) throw ArityError("conset_point: arity mismatch");
    ConstructibleSet s;
    s.vars = vars;
    ConPiece piece;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Poly v = Poly::variable(vars, i) - Poly::constant(vars, point[i]);
        piece.equations.push_back(v);
    }
    s.pieces.push_back(std::move(piece));
    return s;
}

ConstructibleSet normalize(ConstructibleSet s) {
    ConstructibleSet out;
    out.vars = s.vars;
    for (auto& piece : s.pieces) {
        ConPiece np;
        np.dim = piece.dim;
        bool empty = false;
        for (const auto& e : piece.equations) {
            if (e.is_zero()) continue; // Z(0) is everything
            if (e.is_constant()) {
                empty = true; // nonzero constant has empty zero set
                break;
            }
            np.equations.push_back(squarefree_part(e));
        }
        if (empty) continue;
        for (const auto& i : piece.inequations) {
            if (i.is_zero()) {
                empty = true; // removing Z(0) removes everything
                break;
            }
            if (i.is_constant()) continue; // removes nothing
            np.inequations.push_back(squarefree_part(i));
        }
        if (!empty) out.pieces.push_back(std::move(np));
    }
    return out;
}

namespace {

void check_same(const ConstructibleSet& a, const ConstructibleSet& b) {
    if (a.vars != b.vars) throw ArityError("constructible sets over different rings");
}

} // namespace

ConstructibleSet set_union(const ConstructibleSet& a, const ConstructibleSet& b) {
    check_same(a, b);
    ConstructibleSet out = a;
    out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
    return normalize(std::move(out));
}

ConstructibleSet set_intersect(const ConstructibleSet& a, const ConstructibleSet& b) {
    check_same(a, b);
    ConstructibleSet out;
    out.vars = a.vars;
    for (const auto& pa : a.pieces) {
        for (const auto& pb : b.pieces) {
            ConPiece p;
            p.equations = pa.equations;
            p.equations.insert(p.equations.end(), pb.equations.begin(), pb.equations.end());
            p.inequations = pa.inequations;
            p.inequations.insert(p.inequations.end(), pb.inequations.begin(),
                                 pb.inequations.end());
            out.pieces.push_back(std::move(p));
        }
    }
    return normalize(std::move(out));
}

ConstructibleSet set_complement(const ConstructibleSet& a) {
    // complement of a union = intersection of the piece complements;
    // complement of a piece = union of D(e) over equations and Z(i) over
    // inequations.
    ConstructibleSet acc = conset_universe(a.vars);
    for (const auto& piece : a.pieces) {
        ConstructibleSet piece_co;
        piece_co.vars = a.vars;
        for (const auto& e : piece.equations) {
            ConPiece q;
            q.inequations.push_back(e);
            piece_co.pieces.push_back(std::move(q));
        }
        for (const auto& i : piece.inequations) {
            ConPiece q;
            q.equations.push_back(i);
            piece_co.pieces.push_back(std::move(q));
        }
        acc = set_intersect(acc, piece_co);
    }
    return acc;
}

bool member(const ConstructibleSet& s, const std::vector<Rational>& point) {
    if (point.size() != s.vars.size()) throw ArityError("member: arity mismatch");
    for (const auto& piece : s.pieces) {
        bool ok = true;
        for (const auto& e : piece.equations)
            if (e.evaluate(point) != 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (const auto& i : piece.inequations)
            if (i.evaluate(point) == 0) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

ConstructibleSet zero_set2(const RatFun& f, const Budget& budget) {
    if (f.nvars() != 2) throw ArityError("zero_set2: n = 2 required");
    if (f.is_zero()) return conset_universe(f.vars());
    Verdict v = decide_regulous2(f, 0, budget);
    if (v.tag != Verdict::Tag::Regulous)
        throw Error("zero_set2: function is not certified regulous (" + v.to_string() + ")");

    ConstructibleSet out;
    out.vars = f.vars();
    if (!f.num().is_constant()) {
        ConPiece main;
        Poly sq = squarefree_part(f.num());
        PlaneZeroAnalysis za = analyze_plane_zeros(sq);
        if (za.curve_flag) main.dim = 1; // certified sign-changing curve factor
        main.equations.push_back(sq);
        for (const auto& [pt, val] : v.values) {
            if (val == 0) continue;
            // excise the point with the distance quadric (x-a)^2 + (y-b)^2
            Poly dx = Poly::variable(out.vars, 0) - Poly::constant(out.vars, pt[0]);
            Poly dy = Poly::variable(out.vars, 1) - Poly::constant(out.vars, pt[1]);
            main.inequations.push_back(dx * dx + dy * dy);
        }
        out.pieces.push_back(std::move(main));
    }
    for (const auto& [pt, val] : v.values) {
        if (val != 0) continue;
        std::vector<Rational> p{pt[0], pt[1]};
        if (!out.pieces.empty() && member(out, p)) continue; // already inside Z(num)
        ConstructibleSet point = conset_point(out.vars, p);
        point.pieces[0].dim = 0;
        out = set_union(out, point);
    }
    return normalize(std::move(out));
}

std::vector<Arc> probe_battery(const ConstructibleSet& s, const Int& height) {
    std::vector<Point2> bases;
    auto add = [&bases](const Point2& p) {
        for (const auto& q : bases)
            if (q == p) return;
        bases.push_back(p);
    };
    add({Rational(0), Rational(0)});
    if (s.vars.size() == 2) {
        for (const auto& piece : s.pieces) {
            for (const auto& e : piece.equations)
                for (const auto& p : sample_curve_points(e, height)) add(p);
            for (const auto& i : piece.inequations)
                for (const auto& p : sample_curve_points(i, height)) add(p);
        }
    }
    std::vector<Arc> battery;
    for (const auto& b : bases) {
        auto arcs = default_battery2(b, Int(2));
        battery.insert(battery.end(), arcs.begin(), arcs.end());
    }
    return battery;
}

std::optional<Arc> euclid_closed_probe(const ConstructibleSet& s,
                                       const std::vector<Arc>& battery) {
    for (const auto& arc : battery) {
        auto base = arc.base_point();
        if (!base || base->size() != s.vars.size()) continue;
        // does the arc lie in S for small t > 0? check symbolically piece-wise
        bool inside = false;
        for (const auto& piece : s.pieces) {
            bool eqs_vanish = true;
            for (const auto& e : piece.equations) {
                RatFun r = substitute(e, arc.components);
                if (!r.is_zero()) {
                    eqs_vanish = false;
                    break;
                }
            }
            if (!eqs_vanish) continue;
            bool ineqs_clear = true;
            for (const auto& i : piece.inequations) {
                RatFun r = substitute(i, arc.components);
                if (r.is_zero()) {
                    ineqs_clear = false; // arc stays inside the removed set
                    break;
                }
            }
            if (ineqs_clear) {
                inside = true;
                break;
            }
        }
        if (!inside) continue;
        // sampled confirmation at small positive parameters
        bool sampled_ok = true;
        for (int d : {16, 64}) {
            std::vector<Rational> pt;
            bool defined = true;
            for (const auto& c : arc.components) {
                std::vector<Rational> tv{Rational(1, d)};
                if (!c.defined_at(tv)) {
                    defined = false;
                    break;
                }
                pt.push_back(c.evaluate(tv));
            }
            if (!defined) continue;
            if (!member(s, pt)) {
                sampled_ok = false;
                break;
            }
        }
        if (!sampled_ok) continue;
        if (!member(s, *base)) return arc; // witness: limit point escapes S
    }
    return std::nullopt;
}

std::string to_string(const ConstructibleSet& s) {
    if (s.pieces.empty()) return "{}";
    std::ostringstream out;
    for (std::size_t i = 0; i < s.pieces.size(); ++i) {
        if (i) out << " u ";
        const auto& p = s.pieces[i];
        if (p.equations.empty() && p.inequations.empty()) {
            out << "R^" << s.vars.size();
            continue;
        }
        out << "{";
        bool first = true;
        for (const auto& e : p.equations) {
            out << (first ? "" : ", ") << e.to_string() << " = 0";
            first = false;
        }
        for (const auto& q : p.inequations) {
            out << (first ? "" : ", ") << q.to_string() << " != 0";
            first = false;
        }
        out << "}";
    }
    return out.str();
}

} // namespace regulous
