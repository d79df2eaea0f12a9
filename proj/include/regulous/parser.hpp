#pragma once

#include "regulous/poly.hpp"
#include "regulous/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace regulous {

class RatFun;

struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& what)
        : Error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

/// Parsed expression tree. Leaves are integer literals and variables; inner
/// nodes are + - * / ^ and unary minus.
struct Ast {
    enum class Kind { Integer, Var, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Int value;                 // Integer
    std::string name;          // Var
    std::uint64_t exponent = 0; // Pow
    std::shared_ptr<Ast> lhs, rhs;
};

using AstPtr = std::shared_ptr<Ast>;

/// Grammar: expr := term (('+'|'-') term)*, term := factor (('*'|'/') factor)*,
/// factor := '-'* base ('^' nat)*, base := integer | name | '(' expr ')'.
/// Whitespace-insensitive.
AstPtr parse_expression(const std::string& text);

struct ParseOptions {
    std::uint64_t exponent_cap = 1u << 16;
};

/// Lower to a polynomial; '/' is accepted only when the divisor evaluates to
/// a nonzero constant. Unknown variables and oversized exponents are errors.
Poly ast_to_poly(const Ast& ast, const std::vector<std::string>& vars,
                 const ParseOptions& opts = {});

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const ParseOptions& opts = {});

/// Lower in the fraction field; '/' by any nonzero expression.
RatFun ast_to_ratfun(const Ast& ast, const std::vector<std::string>& vars,
                     const ParseOptions& opts = {});

RatFun parse_ratfun(const std::string& text, const std::vector<std::string>& vars,
                    const ParseOptions& opts = {});

std::vector<std::string> split_vars(const std::string& comma_separated);

} // namespace regulous
