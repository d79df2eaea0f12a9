#pragma once

#include "regulous/blowup.hpp"
#include "regulous/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regulous {

/// One piece of a constructible set: intersection of the zero sets of
/// `equations` minus the union of the zero sets of `inequations`.
struct ConPiece {
    std::vector<Poly> equations;
    std::vector<Poly> inequations;
    std::optional<int> dim; // caller-supplied annotation
};

/// Finite union of pieces. Polynomials are normalized (squarefree,
/// integer-primitive, lead-positive); semantic equality of sets is not
/// canonicalized, only membership is decided.
struct ConstructibleSet {
    std::vector<std::string> vars;
    std::vector<ConPiece> pieces;
};

ConstructibleSet conset_empty(std::vector<std::string> vars);
ConstructibleSet conset_universe(std::vector<std::string> vars);
ConstructibleSet conset_zero(const Poly& p);
ConstructibleSet conset_point(const std::vector<std::string>& vars,
                              const std::vector<Rational>& point);

ConstructibleSet normalize(ConstructibleSet s);

ConstructibleSet set_union(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet set_intersect(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet set_complement(const ConstructibleSet& a);

bool member(const ConstructibleSet& s, const std::vector<Rational>& point);

/// Zero set of a certified 0-regulous plane function as a constructible
/// set: Z(num) minus the indeterminacy points with nonzero extension value,
/// plus the indeterminacy points with extension value zero.
ConstructibleSet zero_set2(const RatFun& f, const Budget& budget = {});

/// Witness of non-closedness: an arc inside S for small t > 0 whose limit
/// point is outside S; none when the battery finds nothing.
std::optional<Arc> euclid_closed_probe(const ConstructibleSet& s, const std::vector<Arc>& battery);

/// Arc battery assembled from the set's own rational features (point pieces,
/// excluded points, curve samples).
std::vector<Arc> probe_battery(const ConstructibleSet& s, const Int& height);

std::string to_string(const ConstructibleSet& s);

} // namespace regulous
