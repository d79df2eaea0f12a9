#pragma once

#include "regulous/poly.hpp"
#include "regulous/ratfun.hpp"

#include <array>
#include <vector>

namespace regulous {

using Point2 = std::array<Rational, 2>;

/// Exact description of the real zero set of a bivariate polynomial, as far
/// as it can be certified with rational arithmetic.
///
/// When `complete` is true the zero set is exactly
///   { points } + union of Z(w) over curve_factors,
/// certified (used for denominators in the even-power positive-coefficient
/// pattern, univariate factors, and definite polynomials). When false, the
/// points are a verified subset and the flags are sampling-based evidence;
/// downstream verdicts must stay Unknown-capable.
struct PlaneZeroAnalysis {
    std::vector<Point2> points;
    std::vector<Poly> curve_factors; // normalized; real zero set certified dim 1
    bool curve_flag = false;         // a 1-dimensional real zero set exists
    bool nonrational_flag = false;   // non-rational isolated candidates certified
    bool complete = false;
};

struct ZeroSetOptions {
    Int probe_height = 3;  // sign-probe grid: rationals of height <= this
};

PlaneZeroAnalysis analyze_plane_zeros(const Poly& p, const ZeroSetOptions& opts = {});

/// Sufficient certificates, any number of variables, sound-only.
bool certified_nonnegative(const Poly& p);
bool certified_positive(const Poly& p);

/// Rational points of height <= h (numerator and denominator), ascending.
std::vector<Rational> rationals_of_height(const Int& h);

/// Indeterminacy report for a reduced rational function on the plane
/// (rational candidate points of Z(den), plus pole-curve / non-rational
/// flags; `complete` certifies the candidate list exhausts Z(den)).
struct IndetReport {
    std::vector<Point2> rational_points;
    bool nonrational_roots_flag = false;
    bool curve_of_poles_flag = false;
    bool complete = false;
    std::vector<Poly> curve_factors; // certified 1-dimensional pole components
};

/// Rational sample points on Z(w) for a bivariate factor w (best effort:
/// slices x = a for small rational a, plus exact roots of univariate factors).
std::vector<Point2> sample_curve_points(const Poly& w, const Int& height);

IndetReport indeterminacy_candidates(const RatFun& f, const ZeroSetOptions& opts = {});

} // namespace regulous
