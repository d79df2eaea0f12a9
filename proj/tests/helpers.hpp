#pragma once

#include "regulous/parser.hpp"
#include "regulous/poly.hpp"
#include "regulous/ratfun.hpp"

#include <random>

namespace testutil {

using namespace regulous;

inline std::vector<std::string> xy() { return {"x", "y"}; }
inline std::vector<std::string> xyz() { return {"x", "y", "z"}; }

inline Poly P(const std::string& s, std::vector<std::string> vars = xy()) {
    return parse_poly(s, vars);
}

inline RatFun F(const std::string& s, std::vector<std::string> vars = xy()) {
    return parse_ratfun(s, vars);
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }

    Rational rational(int num_bound = 9) {
        int n = uniform(-num_bound, num_bound);
        int d = uniform(1, 4);
        return Rational(n, d);
    }

    Poly poly(const std::vector<std::string>& vars, int max_terms = 4, int max_exp = 3) {
        Poly p(vars);
        int nt = uniform(1, max_terms);
        for (int t = 0; t < nt; ++t) {
            Monomial m(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i)
                m.e[i] = static_cast<std::uint32_t>(uniform(0, max_exp));
            p.add_term(m, Rational(uniform(-9, 9)));
        }
        return p;
    }

    Poly nonzero_poly(const std::vector<std::string>& vars, int max_terms = 4, int max_exp = 3) {
        while (true) {
            Poly p = poly(vars, max_terms, max_exp);
            if (!p.is_zero()) return p;
        }
    }

    std::vector<Rational> point(std::size_t n) {
        std::vector<Rational> pt;
        for (std::size_t i = 0; i < n; ++i) pt.push_back(rational());
        return pt;
    }
};

} // namespace testutil
