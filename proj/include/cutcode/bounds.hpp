// Lower and upper bounds on the length and distance of minimal codes, in
// exact integer arithmetic. Only the asymptotic rates are floating point.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cutcode/gf.hpp"

namespace cutcode {

namespace detail {

inline void check_q(unsigned q) {
    if (gf::detail::prime_power(q).first == 0 || q > gf::kMaxOrder)
        throw std::invalid_argument("bounds: unsupported q=" + std::to_string(q));
}

inline void check_k2(unsigned k) {
    if (k < 2) throw std::invalid_argument("bounds: need k >= 2");
}

inline std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace detail

/// n >= (k-1)q + 1.
inline std::uint64_t lb_length_geometric(unsigned q, unsigned k) {
    detail::check_q(q);
    if (k < 1) throw std::invalid_argument("bounds: need k >= 1");
    return std::uint64_t{k - 1} * q + 1;
}

/// d >= k + q - 2.
inline std::uint64_t lb_distance(unsigned q, unsigned k) {
    detail::check_q(q);
    detail::check_k2(k);
    return k + q - 2;
}

/// sum_{i<k} ceil(d / q^i), with d = k + q - 2 unless given.
inline std::uint64_t lb_length_griesmer(unsigned q, unsigned k, std::optional<std::uint64_t> d = std::nullopt) {
    detail::check_q(q);
    detail::check_k2(k);
    const std::uint64_t dd = d.value_or(lb_distance(q, k));
    std::uint64_t sum = 0, pw = 1;
    for (unsigned i = 0; i < k; ++i) {
        sum += detail::ceil_div(dd, pw);
        if (pw <= dd) pw *= q;  // once q^i > d every further term is 1
    }
    return sum;
}

/// Lower bound on the length of an [n,3]_q minimal code, by the shape of q.
inline std::uint64_t lb_length_dim3(unsigned q) {
    detail::check_q(q);
    const auto [p, m] = gf::detail::prime_power(q);
    const std::uint64_t r = detail::isqrt(q);
    const bool square = r * r == q;
    if (q < 9) return 3 * std::uint64_t{q};
    if (q > 4 && square) return 2 * std::uint64_t{q} + 2 * r + 2;
    if (q == 11 || q == 13 || q == 17 || q == 19) return (5 * std::uint64_t{q} + 8) / 2;
    if (q > 19 && m % 2 == 1) {
        const unsigned d = (m - 1) / 2;
        std::uint64_t pd = 1;
        for (unsigned i = 0; i < d; ++i) pd *= p;
        return pd * detail::ceil_div(pd * p + 1, pd + 1) + 2;
    }
    throw std::invalid_argument("bounds: no dimension-3 length bound for q=" + std::to_string(q));
}

/// floor((q/2)(sqrt(8q-7) + 1) + 2), upper bound on the length of a reduced [n,3]_q minimal code.
inline std::uint64_t ub_length_reduced_dim3(unsigned q) {
    detail::check_q(q);
    const std::uint64_t qq = q;
    // (q sqrt(8q-7) + q) / 2 floors the same as (isqrt(q^2 (8q-7)) + q) / 2.
    return (detail::isqrt(qq * qq * (8 * qq - 7)) + qq) / 2 + 2;
}

/// Largest applicable lower bound on the length.
inline std::uint64_t lb_length_best(unsigned q, unsigned k) {
    if (k < 2) return lb_length_geometric(q, k);
    std::uint64_t best = std::max(lb_length_geometric(q, k), lb_length_griesmer(q, k));
    if (k == 3) best = std::max(best, lb_length_dim3(q));
    return best;
}

struct ConjecturedBound {
    std::uint64_t d_lb = 0, n_lb = 0;
    static constexpr bool conjectural = true;
};

/// d >= (k-1)(q-1) + 1, and the Griesmer length it would force. Unproven.
inline ConjecturedBound conjectured_lb(unsigned q, unsigned k) {
    detail::check_q(q);
    detail::check_k2(k);
    ConjecturedBound c;
    c.d_lb = std::uint64_t{k - 1} * (q - 1) + 1;
    c.n_lb = lb_length_griesmer(q, k, c.d_lb);
    return c;
}

struct AsymptoticRates {
    double one_over_q = 0, maximal = 0, minimal = 0;
};

/// Rate bounds: R <= 1/q, the maximal bound log_q 2, and the rate
/// 1/2 log_q(q^2 / (q^2 - q + 1)) below which minimal families exist.
inline AsymptoticRates asymptotic_rates(unsigned q) {
    if (q < 2) throw std::invalid_argument("bounds: need q >= 2");
    const double lq = std::log(static_cast<double>(q));
    const double q2 = static_cast<double>(q) * q;
    return {1.0 / q, std::log(2.0) / lq, 0.5 * std::log(q2 / (q2 - q + 1)) / lq};
}

struct BoundsReport {
    unsigned q = 0, k = 0;
    std::uint64_t lb_length_geometric = 0, lb_length_griesmer = 0, lb_length_best = 0, lb_distance = 0;
    ConjecturedBound conjectured;
    std::optional<std::uint64_t> lb_length_dim3, ub_length_reduced_dim3;
    AsymptoticRates rates;
};

inline BoundsReport bounds_report(unsigned q, unsigned k) {
    detail::check_q(q);
    detail::check_k2(k);
    BoundsReport r;
    r.q = q;
    r.k = k;
    r.lb_length_geometric = lb_length_geometric(q, k);
    r.lb_length_griesmer = lb_length_griesmer(q, k);
    r.lb_length_best = lb_length_best(q, k);
    r.lb_distance = lb_distance(q, k);
    r.conjectured = conjectured_lb(q, k);
    if (k == 3) {
        r.lb_length_dim3 = lb_length_dim3(q);
        r.ub_length_reduced_dim3 = ub_length_reduced_dim3(q);
    }
    r.rates = asymptotic_rates(q);
    return r;
}

}  // namespace cutcode
