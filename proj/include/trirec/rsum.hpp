#pragma once

#include <cstdint>

#include "trirec/coefficients.hpp"
#include "trirec/report.hpp"

namespace trirec {

// Parameters of the general nested recursive sum
//   R(N, k, delta, delta0) = prod_{m=1..k} [ sum_{i_m = i_{m-1}+delta}^{N + m*delta} d(i_m) ]
// with i_0 = delta0 and left-to-right nesting: every sum's lower bound chases
// the previous index. An empty range contributes zero.
struct RSumParams {
    std::int64_t order;   // N
    std::int64_t power;   // k, number of nested sums (>= 1)
    std::int64_t delta;   // recursive shift (>= 1; nonpositive shifts would
                          // make the touched index set unbounded below)
    std::int64_t delta0;  // initial shift (<= order)
};

inline std::int64_t max_power(std::int64_t n) { return (n + 1) / 2; }

namespace detail {

// Depth-first expansion, deliberately without memoization: cost equals the
// number of monomials, and the transparent traversal is what the identity
// tests exercise. `leaves` counts completed monomials when non-null.
template <class S>
S rsum_nested(const BasicCoefficientSequence<S>& d, std::int64_t order, std::int64_t delta,
              std::int64_t k, std::int64_t m, std::int64_t prev, std::uint64_t* leaves) {
    S total = ScalarTraits<S>::zero();
    const std::int64_t last = order + m * delta;
    for (std::int64_t i = prev + delta; i <= last; ++i) {
        if (m == k) {
            total += d.at(i);
            if (leaves) ++*leaves;
        } else {
            total += d.at(i) * rsum_nested(d, order, delta, k, m + 1, i, leaves);
        }
    }
    return total;
}

}  // namespace detail

template <class S>
S rsum_general(const BasicCoefficientSequence<S>& d, const RSumParams& p) {
    if (p.power < 1) throw InvalidParams("R-sum power k must be >= 1");
    if (p.delta < 1) throw InvalidParams("R-sum recursive shift delta must be >= 1");
    if (p.order < p.delta0) throw InvalidParams("R-sum requires N >= delta0");
    if (p.power > 5000) throw TooLarge("R-sum power beyond the recursion-depth guard (5000)");
    return detail::rsum_nested(d, p.order, p.delta, p.power, 1, p.delta0, nullptr);
}

// The delta = 2, delta0 = -1 specialization whose monomials are exactly the
// gap-2 index tuples over [1, N + 2k].
template <class S>
S rsum_reduced(const BasicCoefficientSequence<S>& d, std::int64_t order, std::int64_t power,
               std::uint64_t* leaves = nullptr) {
    if (power < 1) throw InvalidParams("reduced R-sum power k must be >= 1");
    if (order < -1) throw InvalidParams("reduced R-sum requires N >= -1");
    if (power > 5000) throw TooLarge("reduced R-sum power beyond the recursion-depth guard (5000)");
    return detail::rsum_nested(d, order, std::int64_t{2}, power, std::int64_t{1}, std::int64_t{-1},
                               leaves);
}

// S(n, p): the sum of all power-p monomials of a(n+1); touches d(1..n).
template <class S>
S s_power_class(const BasicCoefficientSequence<S>& d, std::int64_t n, std::int64_t p) {
    if (p < 1 || p > max_power(n)) {
        throw InvalidParams("power class p must satisfy 1 <= p <= floor((n+1)/2)");
    }
    return rsum_reduced(d, n - 2 * p, p);
}

// a(n+1) = 1 + sum of every power class, by recursive expansion.
template <class S>
S solve_via_rsum(const BasicCoefficientSequence<S>& d, std::int64_t n, EvalStats* stats = nullptr) {
    if (n < 0) throw InvalidParams("solve_via_rsum needs n >= 0");
    if (n > 10'000) throw TooLarge("n beyond the recursion guard (10000)");
    S total = ScalarTraits<S>::one();
    std::uint64_t leaves = 0;
    for (std::int64_t p = 1; p <= max_power(n); ++p) {
        total += rsum_reduced(d, n - 2 * p, p, stats ? &leaves : nullptr);
    }
    if (stats) {
        stats->terms_evaluated += leaves;
    }
    return total;
}

}  // namespace trirec
