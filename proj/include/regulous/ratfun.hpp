#pragma once

#include "regulous/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace regulous {

/// Reduced rational function p/q: gcd(p, q) = 1, q integer-primitive with
/// positive graded-lex leading coefficient.
class RatFun {
  public:
    RatFun() = default;
    RatFun(Poly num, Poly den);

    static RatFun from_poly(Poly p);
    static RatFun constant(std::vector<std::string> vars, const Rational& c);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }
    std::size_t nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator-() const;
    RatFun pow(std::uint64_t n) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Quotient-rule partial derivative, reduced.
    RatFun derivative(std::size_t var) const;

    /// Exact value; requires den(point) != 0.
    Rational evaluate(const std::vector<Rational>& point) const;
    bool defined_at(const std::vector<Rational>& point) const;

    /// Composition with rational images for every variable, reduced.
    RatFun substitute(const std::vector<RatFun>& images) const;

    std::string to_string() const;

  private:
    Poly num_, den_;
};

RatFun substitute(const Poly& p, const std::vector<RatFun>& images);

/// All partial derivatives of f up to order k, each reduced. coeffs[0] = f.
struct Jet {
    int order = 0;
    std::map<Monomial, RatFun, GrlexLess> coeffs; // multi-index -> d^I f
};

Jet jet(const RatFun& f, int k);

/// Multi-indices of |I| <= k over n variables, graded-lex ascending.
std::vector<Monomial> multi_indices_upto(std::size_t n, int k);

/// Truncated jet product at order ell:
/// (j*k)[I] = sum_{J+K=I} binom(I, J) j[J] k[K]  -- the jet-bundle algebra.
Jet jet_product_truncated(const Jet& a, const Jet& b, int ell);

/// Gluing formula (sum s_i^2 p_i q_i) / (sum s_i^2 q_i^2) for pieces
/// (p_i, q_i, s_i); represents the function p_i/q_i glued over D(s_i).
RatFun glue_regular(const std::vector<std::array<Poly, 3>>& pieces);

} // namespace regulous
