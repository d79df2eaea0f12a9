#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace regulous {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ArityError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

/// Height of a rational a/b in lowest terms: max(|a|, b).
inline Int height(const Rational& r) {
    Int a = abs(numerator(r));
    Int b = denominator(r);
    return a > b ? a : b;
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace regulous
