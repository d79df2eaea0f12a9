#pragma once

#include "regulous/arc.hpp"
#include "regulous/ratfun.hpp"
#include "regulous/zeroset.hpp"

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regulous {

struct Budget {
    int max_depth = 12;
    int max_charts = 512;
    int kmax_cap = 8;
    Int arc_height = 3; // battery coefficient height
};

/// One exceptional component seen inside a chart as a coordinate line
/// {u = offset} or {v = offset}. Ownership marks which copy is responsible
/// for blowing up points of the component (the two creation charts overlap
/// along v <-> 1/v; the second chart owns only the direction the first one
/// misses).
struct TrackedLine {
    char axis = 'u'; // 'u': line {u = offset} parametrized by v; 'v': dual
    Rational offset;
    int component = -1;
    bool owns_all = true;
    Rational owned_param; // when !owns_all: single owned parameter value
};

/// Affine chart of an iterated blow-up. Coordinates are always named (u, v);
/// map_to_root is the full polynomial composition down to the original plane.
struct Chart {
    int id = 0;
    int parent = -1;
    int which = 0; // 0 = root; 1 = (c1 + u, c2 + u*v); 2 = (c1 + u*v, c2 + v)
    Point2 center{Rational(0), Rational(0)}; // in parent coordinates
    std::vector<Poly> map_to_root;           // two polynomials in (u, v)
    std::vector<TrackedLine> lines;
    RatFun pullback;
    bool leaf = true;
    int depth = 0;
};

enum class ResolutionStatus { Resolved, BudgetExceeded, NonrationalCenter, PoleCurve };

std::string to_string(ResolutionStatus s);

struct ResolutionTree {
    RatFun root_fun;
    std::vector<Chart> charts; // charts[0] = root (identity)
    ResolutionStatus status = ResolutionStatus::Resolved;
    bool analysis_complete = false; // Z(den) certified exhausted by the centers
    std::map<int, Point2> component_root_point;
    std::vector<Point2> root_points;  // the indeterminacy points handled
    std::vector<Poly> curve_factors;  // certified pole curves of the denominator
    int depth = 0;
    std::string note;

    // evidence for non-resolved refutations
    struct PoleEvidence {
        int chart;
        TrackedLine line;
    };
    std::vector<PoleEvidence> pole_evidence;

    std::vector<int> leaves() const;
};

/// Blow up a chart at a rational center (given in chart coordinates);
/// returns the two child charts with composed maps, inherited strict
/// transforms and the fresh exceptional component `new_component`.
std::pair<Chart, Chart> blowup_point(const Chart& c, const Point2& center, int first_child_id,
                                     int new_component);

/// Reduced composition f o map_to_root of the chart.
RatFun pullback(const RatFun& f, const Chart& c);

ResolutionTree resolve_indeterminacy2(const RatFun& f, const Budget& budget = {});

/// Resolution of the single subtree over one indeterminacy point; the rest
/// of the plane is ignored (pole curves elsewhere do not abort the run).
ResolutionTree resolve_at_point(const RatFun& f, const Point2& x, const Budget& budget = {});

/// Restriction of the leaf pullbacks to every copy of every exceptional
/// component over the given root point; constancy decided exactly.
struct FiberComponent {
    int component = -1;
    struct Copy {
        int chart;
        TrackedLine line;
        RatFun restriction; // univariate in the line parameter "t"
    };
    std::vector<Copy> copies;
    bool constant = false;
    Rational value; // when constant
};

std::vector<FiberComponent> fiber_values(const ResolutionTree& t, const Point2& x);

// --- verdicts -------------------------------------------------------------

struct WitnessArcs {
    Monomial coeff_index; // jet coefficient the witness refutes
    Arc a, b;
    ExtValue limit_a, limit_b;
    std::vector<Rational> base;
};

struct WitnessInfiniteArc {
    Monomial coeff_index;
    Arc a;
    ExtValue limit;
    std::vector<Rational> base;
};

struct Verdict {
    enum class Tag { Regulous, NotRegulous, Unknown };
    Tag tag = Tag::Unknown;
    int k = 0;
    std::map<Point2, Rational> values; // extension values of f at indet points
    std::optional<WitnessArcs> arc_witness;
    std::optional<WitnessInfiniteArc> infinite_witness;
    std::string reason;

    bool is_regulous() const { return tag == Tag::Regulous; }
    std::string to_string() const;
};

/// Complete decision for n = 2 via the jet criterion: f is k-regulous iff
/// every jet coefficient of order <= k extends continuously, decided by
/// iterated blow-ups and exceptional-fiber constancy.
Verdict decide_regulous2(const RatFun& f, int k, const Budget& budget = {});

/// Same decision restricted to a single indeterminacy point (the rest of
/// the plane is ignored); used for localized statements.
Verdict decide_at_point(const RatFun& f, const Point2& x, int k, const Budget& budget = {});

struct KmaxResult {
    enum class Tag { Value, AtLeastCap, NotRegulousAtAll, Unknown };
    Tag tag = Tag::Unknown;
    int k = -1;
    std::string reason;
    std::string to_string() const;
};

KmaxResult kmax(const RatFun& f, int cap, const Budget& budget = {});

struct Stratification2 {
    Poly open_stratum_den;                    // open stratum D(den)
    std::vector<std::pair<Point2, Rational>> point_strata;
};

Stratification2 stratify2(const RatFun& f, const Budget& budget = {});

/// Arc battery through a base point: lines and parabolas
/// (t, a t + b t^2) + swapped coordinates, coefficient height <= h.
std::vector<Arc> default_battery2(const Point2& base, const Int& height);

struct RefutationWitness {
    Arc a;
    std::optional<Arc> b; // absent for a single infinite-limit arc
    ExtValue limit_a, limit_b;
    std::vector<Rational> base;
};

/// Sound-only continuity refuter: two battery arcs with distinct exact
/// limits at a common base point, or one arc with an infinite limit.
std::optional<RefutationWitness> refute_by_arcs(const RatFun& f, const std::vector<Arc>& battery);

std::string to_string(const Point2& p);

} // namespace regulous
