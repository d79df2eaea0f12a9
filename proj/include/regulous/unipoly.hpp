#pragma once

#include "regulous/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regulous {

/// One real root of a univariate polynomial: either an exact rational or a
/// Sturm-isolated open interval with rational endpoints containing exactly
/// one (irrational) root.
struct RealRoot {
    bool exact = false;
    Rational value;    // when exact
    Rational lo, hi;   // open isolating interval otherwise
};

/// Dense univariate polynomial over Q, lowest degree first.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& a);
    /// a + b t
    static UniPoly linear(const Rational& a, const Rational& b);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_value() const { return c_.empty() ? Rational(0) : c_[0]; }

    /// Order of vanishing at t = 0 (index of lowest nonzero coefficient);
    /// requires nonzero.
    std::size_t valuation() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& k) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    Rational evaluate(const Rational& t) const;

    /// Euclidean division over Q: returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    /// Monic gcd.
    friend UniPoly gcd(const UniPoly& a, const UniPoly& b);

    UniPoly squarefree_part() const;

    /// All real roots: exact rational roots extracted first (rational root
    /// theorem), remaining roots isolated by Sturm bisection. Requires
    /// nonzero input. Ordered increasingly.
    std::vector<RealRoot> isolate_real_roots() const;

    std::vector<Rational> rational_roots() const;

    /// Exact count of real roots (without multiplicity).
    int count_real_roots() const;

    /// True when p(t) >= 0 for every real t (via squarefree decomposition:
    /// the odd-multiplicity part must have no real roots and a positive
    /// leading coefficient).
    bool is_nonnegative() const;

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Sign changes of the Sturm chain of u at t = a (a must not be a root of u).
int sturm_variations(const std::vector<UniPoly>& chain, const Rational& a);
std::vector<UniPoly> sturm_chain(const UniPoly& u);

} // namespace regulous
