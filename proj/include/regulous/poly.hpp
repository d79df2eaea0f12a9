#pragma once

#include "regulous/monomial.hpp"
#include "regulous/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regulous {

class UniPoly;

/// Sparse multivariate polynomial over Q with a fixed ordered list of
/// variable names. Terms are kept in graded-lex order and never store a
/// zero coefficient.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }
    static Poly constant(std::vector<std::string> vars, const Rational& c);
    static Poly variable(std::vector<std::string> vars, std::size_t index, std::uint32_t exp = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value as a constant; requires is_constant().
    Rational constant_value() const;

    /// Total degree; degree(0) = -1 by convention.
    long long degree() const;
    long long degree_in(std::size_t var) const;

    /// Coefficient of var^d, a polynomial in the remaining variables
    /// (same ambient ring, exponent of `var` zeroed).
    Poly coeff_in(std::size_t var, std::uint32_t d) const;

    const Rational& coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    /// Leading term in graded-lex order; requires nonzero.
    std::pair<Monomial, Rational> leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(std::uint64_t n) const;

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(std::size_t var) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Substitute polynomial images for every variable (images live in a
    /// common target ring). Chart maps of blow-ups are polynomial, so this
    /// is the pullback workhorse.
    Poly substitute(const std::vector<Poly>& images) const;

    /// Exact multivariate division: returns a/b when b divides a, nullopt
    /// otherwise.
    std::optional<Poly> divide_exact(const Poly& b) const;

    /// Multiply by the unique positive rational that makes the coefficients
    /// coprime integers with positive graded-lex leading coefficient.
    Poly normalized() const;
    /// The factor c > 0 with (*this) * c == normalized() (sign folded in).
    Rational normalization_factor() const;

    /// Content with respect to one variable: gcd of the coefficient
    /// polynomials, normalized.
    Poly content_in(std::size_t var) const;
    Poly primitive_part_in(std::size_t var) const;

    bool involves(std::size_t var) const { return degree_in(var) > 0; }
    /// True when every term has an even exponent of `var`.
    bool even_in(std::size_t var) const;

    /// Substitute var := value, dropping the variable into the coefficients
    /// (result stays in the same ambient ring).
    Poly substitute_value(std::size_t var, const Rational& value) const;

    /// View of a polynomial that involves at most the single variable `var`
    /// as a dense univariate polynomial.
    UniPoly to_univariate(std::size_t var) const;

    /// Canonical textual form: graded-lex descending, explicit '*' and '^',
    /// coefficients as a/b.
    std::string to_string() const;

  private:
    void check_same_ambient(const Poly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Primitive gcd with positive graded-lex leading coefficient (subresultant
/// PRS on the last variable present); gcd(0, b) = normalized b.
Poly gcd_poly(const Poly& a, const Poly& b);

/// Product of the distinct irreducible factors of p (char 0), normalized.
Poly squarefree_part(const Poly& p);

/// Sylvester resultant eliminating `var`. If one argument is constant in
/// `var`, returns it raised to the other's degree; throws if both are.
Poly resultant(const Poly& a, const Poly& b, std::size_t var);

bool divides(const Poly& d, const Poly& p);

} // namespace regulous
