#pragma once

#include "regulous/blowup.hpp"
#include "regulous/parser.hpp"
#include "regulous/ratfun.hpp"

#include <memory>
#include <vector>

namespace regulous {

/// Expression tree over n variables for compositional regulousness
/// certificates. Leaves are constants and variables; Compose2 applies a
/// bivariate rational function to two argument subtrees.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Compose2 };
    Kind kind = Kind::Const;
    std::vector<std::string> vars; // ambient variables, shared across the tree
    Rational value;                // Const
    std::size_t var_index = 0;     // Var
    std::uint64_t exponent = 0;    // Pow
    ExprPtr lhs, rhs;
    RatFun inner;                  // Compose2: function of two formal variables
    std::vector<ExprPtr> args;     // Compose2 arguments (size 2)

    static ExprPtr constant(std::vector<std::string> vars, const Rational& c);
    static ExprPtr variable(std::vector<std::string> vars, std::size_t index);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr pow(ExprPtr a, std::uint64_t e);
    static ExprPtr compose2(RatFun inner, ExprPtr arg0, ExprPtr arg1);
};

ExprPtr expr_from_ast(const Ast& ast, const std::vector<std::string>& vars);
ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& vars);

/// Collapse to a single reduced rational function.
RatFun expr_to_ratfun(const Expr& e);

/// Sum of squares of the inputs: a single function with the same zero set
/// as the common zero set of the family (the ring's radical generator).
ExprPtr radical_generator(const std::vector<ExprPtr>& fs);

/// Compositional k-regulousness certification:
///  - polynomials and positive-denominator quotients are regulous;
///  - subtrees supported on <= 2 variables are decided exactly by blow-ups;
///  - sums, products, powers and 2-variable compositions of certified pieces
///    are certified;
/// arc refutation is consulted before any Unknown.
Verdict certify_regulous(const ExprPtr& e, int k, const Budget& budget = {});

/// Arc battery for n variables: coordinate-pair batteries through the base
/// point plus short line segments in mixed directions.
std::vector<Arc> default_battery_n(const std::vector<Rational>& base, std::size_t n,
                                   const Int& height);

std::optional<RefutationWitness> refute_by_arcs_expr(const ExprPtr& e,
                                                     const std::vector<Arc>& battery);

} // namespace regulous
