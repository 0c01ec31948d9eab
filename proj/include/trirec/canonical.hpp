#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "trirec/engines.hpp"
#include "trirec/recurrence.hpp"

namespace trirec {

// Output of the substitution that normalizes the general recurrence:
// d(1) = B(1)/A(1) with the A(0) := 1 convention, d(i) = B(i)/(A(i) A(i-1))
// for i >= 2, and the prefix products P(i) = A(1) ... A(i) with P(0) = 1
// that map canonical values back to W.
template <class S>
struct CanonicalizationResult {
    std::vector<S> d;                // d[i-1] = d(i), i = 1..n_max
    std::vector<S> prefix_products;  // [P(0), ..., P(n_max)]
    S C0;
    S C1;

    BasicCoefficientSequence<S> d_sequence() const {
        return BasicCoefficientSequence<S>::table(d, 1);
    }
};

template <class S>
CanonicalizationResult<S> to_canonical(const GeneralRecurrence<S>& rec, std::int64_t n_max) {
    if (n_max < 0) throw InvalidParams("to_canonical needs n_max >= 0");
    rec.check_pivots(n_max);
    CanonicalizationResult<S> out{{}, {}, rec.C0, rec.C1};
    out.prefix_products.reserve(static_cast<std::size_t>(n_max) + 1);
    out.prefix_products.push_back(ScalarTraits<S>::one());
    out.d.reserve(static_cast<std::size_t>(n_max));
    S prev_a = ScalarTraits<S>::one();  // A(0) := 1
    for (std::int64_t i = 1; i <= n_max; ++i) {
        const S a = rec.A.at(i);
        out.d.push_back(rec.B.at(i) / (a * prev_a));
        out.prefix_products.push_back(out.prefix_products.back() * a);
        prev_a = a;
    }
    return out;
}

// Undoes the substitution: W(0) = a(0), W(i) = a(i) * P(i-1). The printed
// form of the substitution is off by a reciprocal; this is the direction
// that actually satisfies the original recurrence, which the tests pin
// against direct iteration.
template <class S>
std::vector<S> reconstruct_general(std::span<const S> a_values,
                                   const CanonicalizationResult<S>& canon) {
    if (a_values.size() > canon.prefix_products.size() + 1) {
        throw InvalidParams("more canonical values than prefix products");
    }
    std::vector<S> w;
    w.reserve(a_values.size());
    for (std::size_t i = 0; i < a_values.size(); ++i) {
        if (i == 0) {
            w.push_back(a_values[0]);
        } else {
            w.push_back(a_values[i] * canon.prefix_products[i - 1]);
        }
    }
    return w;
}

// a(m) of the canonical relation from arbitrary initials (a0, a1), expressed
// through two unit-initial solutions of shifted coefficient sequences:
//   a(m) = a1 * u(m-1) + a0 * d(1) * v(m-2),
// where u solves for d'(i) = d(i+1) and v for d''(i) = d(i+2).
template <class S, class Engine>
S canonical_term_general(const BasicCoefficientSequence<S>& d, std::int64_t m, const S& a0,
                         const S& a1, Engine&& engine) {
    if (m < 0) throw InvalidParams("canonical_term_general needs m >= 0");
    if (m == 0) return a0;
    if (m == 1) return a1;
    const S u = engine(d.shifted(1), m - 1);
    const S v = engine(d.shifted(2), m - 2);
    return a1 * u + a0 * d.at(1) * v;
}

template <class S>
S canonical_term_general(Method method, const BasicCoefficientSequence<S>& d, std::int64_t m,
                         const S& a0, const S& a1, const EvalOptions& opts = {},
                         EvalStats* stats = nullptr) {
    return canonical_term_general(d, m, a0, a1,
                                  [&](const BasicCoefficientSequence<S>& seq, std::int64_t i) {
                                      return canonical_term(method, seq, i, opts, stats);
                                  });
}

// W(n) of the general recurrence: canonicalize, solve the canonical relation
// from (C0, C1) with the supplied engine, then scale by the prefix product.
template <class S, class Engine>
S solve_general(const GeneralRecurrence<S>& rec, std::int64_t n, Engine&& engine) {
    if (n < 0) throw InvalidParams("solve_general needs n >= 0");
    if (n == 0) return rec.C0;
    if (n == 1) return rec.C1;
    const CanonicalizationResult<S> canon = to_canonical(rec, n - 1);
    const S a_n = canonical_term_general(canon.d_sequence(), n, canon.C0, canon.C1,
                                         std::forward<Engine>(engine));
    return a_n * canon.prefix_products[static_cast<std::size_t>(n - 1)];
}

template <class S>
S solve_general(const GeneralRecurrence<S>& rec, std::int64_t n, Method method,
                const EvalOptions& opts = {}, EvalStats* stats = nullptr) {
    return solve_general(rec, n, [&](const BasicCoefficientSequence<S>& seq, std::int64_t m) {
        return canonical_term(method, seq, m, opts, stats);
    });
}

}  // namespace trirec
