#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace regulous {

/// Exponent vector of fixed length = ambient variable count.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }

    std::uint64_t degree() const {
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    }

    bool is_one() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    /// Componentwise division; caller must check divisibility first.
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    Monomial quotient(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded lexicographic order: first by total degree, ties broken
/// lexicographically with the first variable most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

} // namespace regulous
