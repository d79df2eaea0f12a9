#pragma once

#include "regulous/blowup.hpp"
#include "regulous/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regulous {

/// Evidence that the zero-extension of h is consistent on Z(f): extension
/// values at the indeterminacy points are zero and the reduced numerator is
/// divisible by every certified pole-carrying curve factor of Z(f).
struct VanishingReport {
    std::vector<std::pair<Point2, Rational>> point_values;
    std::vector<std::pair<Poly, bool>> curve_divisibility;
    bool ok = false;
};

/// Certificate for the regulous Lojasiewicz inequality: N with f^N * g
/// k-regulous (N = M + k, M the smallest exponent taming every partial of g
/// of order <= k; the certificate keeps both M and N).
struct LojaCert {
    RatFun f, g;
    int k = 0;
    int N = 0;
    int M = 0;
    RatFun h; // reduced f^N * g
    Verdict h_verdict;
    VanishingReport vanishing;
};

struct LojaResult {
    std::optional<LojaCert> cert;
    std::string reason; // when empty cert is present
};

LojaResult loja_exponent(const RatFun& f, const RatFun& g, int k, int n_cap,
                         const Budget& budget = {});

bool verify_loja(const LojaCert& c, const Budget& budget = {}, std::string* why = nullptr);

/// Radical membership certificate: f^N = g * h with h k-regulous.
struct RadicalCert {
    RatFun f, g;
    int k = 0;
    int N = 0;
    RatFun h;
    Verdict h_verdict;
};

struct RadicalResult {
    enum class Tag { Certified, Refuted, Unknown };
    Tag tag = Tag::Unknown;
    std::optional<RadicalCert> cert;
    Point2 refutation_point{}; // g = 0 but f != 0 there
    std::string reason;
};

RadicalResult radical_membership(const RatFun& f, const RatFun& g, int k, int n_cap,
                                 const Budget& budget = {});

bool verify_radical(const RadicalCert& c, const Budget& budget = {}, std::string* why = nullptr);

/// Nullstellensatz certificate: f^N = sum h_i f_i with regulous multipliers.
struct NssCert {
    std::vector<std::string> vars;
    ExprPtr target;
    std::vector<ExprPtr> generators;
    std::vector<ExprPtr> multipliers;
    int N = 1;
    int k = 0;
};

struct NssVerifyResult {
    bool valid = false;
    std::string reason;
};

NssVerifyResult verify_nss_certificate(const NssCert& c, const Budget& budget = {});

/// Vanishing orders along a rational line; sound non-membership via
/// "regulous multipliers restrict to order >= 0".
struct OrderReport {
    Arc line;
    std::vector<std::pair<std::size_t, long long>> generator_orders;
    long long target_order = 0;
};

struct OrderResult {
    enum class Tag { NonMember, Inconclusive };
    Tag tag = Tag::Inconclusive;
    OrderReport report;
    std::string reason;
};

OrderResult nonmembership_by_order(const ExprPtr& target, const std::vector<ExprPtr>& gens,
                                   const Arc& line);

} // namespace regulous
