#pragma once

#include "regulous/ratfun.hpp"
#include "regulous/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regulous {

/// Extended value: the codomain of one-sided limits.
struct ExtValue {
    enum class Tag { Finite, PlusInfinity, MinusInfinity, IndeterminateTwoSided };
    Tag tag = Tag::Finite;
    Rational value; // when Finite

    static ExtValue finite(const Rational& v) { return {Tag::Finite, v}; }
    static ExtValue plus_inf() { return {Tag::PlusInfinity, Rational(0)}; }
    static ExtValue minus_inf() { return {Tag::MinusInfinity, Rational(0)}; }
    static ExtValue indeterminate() { return {Tag::IndeterminateTwoSided, Rational(0)}; }

    bool is_finite() const { return tag == Tag::Finite; }
    bool is_infinite() const { return tag == Tag::PlusInfinity || tag == Tag::MinusInfinity; }
    bool operator==(const ExtValue& o) const {
        return tag == o.tag && (tag != Tag::Finite || value == o.value);
    }
    std::string to_string() const;
};

/// Rational arc t -> (gamma_1(t), ..., gamma_n(t)); each component is a
/// univariate rational function of t, reduced.
struct Arc {
    std::vector<RatFun> components; // over the ring Q[t]

    std::size_t dimension() const { return components.size(); }

    /// Limit of each component at t -> 0; the arc has a finite base point
    /// when every component is defined (no pole) at t = 0.
    std::optional<std::vector<Rational>> base_point() const;

    std::string to_string() const;
};

/// Parse "t, t^2" style arc text into n univariate components.
Arc parse_arc(const std::string& text, std::size_t expected_dim);

Arc arc_from_polys(const std::vector<UniPoly>& comps);

/// Constant arc pinned at a point (useful as the "value at the point" arc).
Arc constant_arc(const std::vector<Rational>& point);

enum class Side { PlusZero, MinusZero };

/// Restriction f o gamma as a reduced univariate rational function.
/// Throws if the arc lies inside the pole locus of f.
RatFun restrict_to_arc(const RatFun& f, const Arc& gamma);

/// Exact one-sided limit at t -> 0 of f o gamma, computed from the
/// valuation of the reduced restriction.
ExtValue arc_limit(const RatFun& f, const Arc& gamma, Side side = Side::PlusZero);

/// Limit of an already-restricted univariate rational function at t -> 0.
ExtValue univariate_limit_at_zero(const RatFun& restriction, Side side);

/// Both sides compared; IndeterminateTwoSided when they differ.
ExtValue arc_limit_two_sided(const RatFun& f, const Arc& gamma);

} // namespace regulous
