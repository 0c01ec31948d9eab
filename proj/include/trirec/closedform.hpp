#pragma once

#include <cstdint>
#include <vector>

#include "trirec/convolve.hpp"

namespace trirec {

// M(n, p) = prod_{l=0..p-1} (n - 2l): the number of grid points of power
// class p. Every factor is >= 1 for 1 <= p <= floor((n+1)/2).
inline Integer capital_m(std::int64_t n, std::int64_t p) {
    if (p < 1 || p > max_power(n)) {
        throw InvalidParams("capital_m needs 1 <= p <= floor((n+1)/2)");
    }
    Integer m = 1;
    for (std::int64_t l = 0; l < p; ++l) m *= (n - 2 * l);
    return m;
}

// Total grid size of the closed form at order n: sum of M(n, p) over classes.
inline Integer closed_form_grid_points(std::int64_t n) {
    Integer total = 0;
    for (std::int64_t p = 1; p <= max_power(n); ++p) total += capital_m(n, p);
    return total;
}

namespace detail {

template <class I>
Integer to_integer(const I& v) {
    if constexpr (std::is_same_v<I, Integer>) {
        return v;
    } else {
        return Integer(static_cast<long>(v));
    }
}

template <class I>
I g_index_impl(std::int64_t m, std::int64_t n, std::int64_t p, const I& q) {
    if (p < 1 || p > max_power(n)) {
        throw InvalidParams("g_index needs 1 <= p <= floor((n+1)/2)");
    }
    if (m < 1 || m > p) throw InvalidParams("g_index needs 1 <= m <= p");
    if (q < I(1) || to_integer(q) > capital_m(n, p)) {
        throw InvalidParams("g_index needs 1 <= q <= M(n,p)");
    }
    I rem = I(q - I(1));
    for (std::int64_t j = 1; j < m; ++j) {
        rem = I(rem / I(n - 2 * p + 2 * j));
    }
    const I dim = I(n - 2 * p + 2 * m);
    return I(rem - I(rem / dim) * dim + I(1));
}

}  // namespace detail

// The m-th recurrence index addressed by global grid index q within power
// class p; identical to decode(q, (n-2p+2j)_j)[m]. Pure quotient/remainder.
inline std::int64_t g_index(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t q) {
    return detail::g_index_impl<std::int64_t>(m, n, p, q);
}

inline std::int64_t g_index(std::int64_t m, std::int64_t n, std::int64_t p, const Integer& q) {
    return detail::g_index_impl<Integer>(m, n, p, q).get_si();
}

namespace detail {

// d(g(1)) * prod_{m=2..p} [ d(g(m)) * H(g(m) - g(m-1) - 2) ]; the factors are
// read left to right and the product stops at the first zero step factor.
template <class S, class I>
S g_term_impl(const BasicCoefficientSequence<S>& d, std::int64_t n, std::int64_t p, const I& q) {
    std::int64_t prev = g_index(1, n, p, q);
    S prod = d.at(prev);
    for (std::int64_t m = 2; m <= p; ++m) {
        const std::int64_t cur = g_index(m, n, p, q);
        if (heaviside(cur - prev - 2) == 0) return ScalarTraits<S>::zero();
        prod *= d.at(cur);
        prev = cur;
    }
    return prod;
}

}  // namespace detail

template <class S>
S g_term(const BasicCoefficientSequence<S>& d, std::int64_t n, std::int64_t p, std::int64_t q) {
    return detail::g_term_impl<S, std::int64_t>(d, n, p, q);
}

template <class S>
S g_term(const BasicCoefficientSequence<S>& d, std::int64_t n, std::int64_t p, const Integer& q) {
    return detail::g_term_impl<S, Integer>(d, n, p, q);
}

// Sum of G(n, p, q) over the whole class-p grid via the shared kernel.
template <class S>
S closed_power_class_sum(const BasicCoefficientSequence<S>& d, std::int64_t n, std::int64_t p,
                         const EvalOptions& opts = {}, EvalStats* stats = nullptr) {
    if (p < 1 || p > max_power(n)) {
        throw InvalidParams("power class p must satisfy 1 <= p <= floor((n+1)/2)");
    }
    const DimVector dv = DimVector::reduced(n - 2 * p, p);
    const auto grid = detail::check_grid(dv, opts);
    const std::vector<S> vals = d.materialize(1, n);
    if (stats) {
        stats->grid_points += grid.total;
        stats->has_grid = true;
    }
    std::uint64_t nz = 0;
    S out = detail::masked_grid_sum(vals, grid.dims, grid.total, opts, stats ? &nz : nullptr);
    if (stats) stats->terms_evaluated += nz;
    return out;
}

// a(n+1) = 1 + sum_p sum_q G(n, p, q): the non-recursive evaluator. Classes
// ascend, q ascends within each class; exact agreement with every other
// route is part of the test suite.
template <class S>
S solve_closed_form(const BasicCoefficientSequence<S>& d, std::int64_t n,
                    const EvalOptions& opts = {}, EvalStats* stats = nullptr) {
    if (n < 0) throw InvalidParams("solve_closed_form needs n >= 0");
    const std::uint64_t limit =
        opts.max_grid < detail::kGridHardLimit ? opts.max_grid : detail::kGridHardLimit;
    const Integer total_grid = closed_form_grid_points(n);
    if (total_grid > limit) throw GridTooLarge(total_grid.get_str(), limit);
    S total = ScalarTraits<S>::one();
    for (std::int64_t p = 1; p <= max_power(n); ++p) {
        total += closed_power_class_sum(d, n, p, opts, stats);
    }
    return total;
}

// Literal reference: walks every (p, q) through g_term. Serial and slow;
// used by tests and the kernel benchmark.
template <class S>
S solve_closed_form_reference(const BasicCoefficientSequence<S>& d, std::int64_t n,
                              const EvalOptions& opts = {}, EvalStats* stats = nullptr) {
    if (n < 0) throw InvalidParams("solve_closed_form needs n >= 0");
    const std::uint64_t limit =
        opts.max_grid < detail::kGridHardLimit ? opts.max_grid : detail::kGridHardLimit;
    const Integer total_grid = closed_form_grid_points(n);
    if (total_grid > limit) throw GridTooLarge(total_grid.get_str(), limit);
    S total = ScalarTraits<S>::one();
    for (std::int64_t p = 1; p <= max_power(n); ++p) {
        const std::int64_t m = capital_m(n, p).get_si();
        for (std::int64_t q = 1; q <= m; ++q) {
            total += g_term(d, n, p, q);
            if (stats) {
                ++stats->grid_points;
                stats->has_grid = true;
                // count grid points whose step factors all survive, matching
                // the kernel's accounting even when a coefficient is zero
                bool open = true;
                std::int64_t prev = g_index(1, n, p, q);
                for (std::int64_t mm = 2; mm <= p && open; ++mm) {
                    const std::int64_t cur = g_index(mm, n, p, q);
                    open = heaviside(cur - prev - 2) == 1;
                    prev = cur;
                }
                if (open) ++stats->terms_evaluated;
            }
        }
    }
    return total;
}

}  // namespace trirec
