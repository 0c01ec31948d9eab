#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trirec/coefficients.hpp"
#include "trirec/index_tuple.hpp"
#include "trirec/recurrence.hpp"

namespace trirec {

// Ground-truth engines: direct iteration of both recurrences plus brute-force
// enumeration of the solution's monomials. Everything else in the library is
// checked against these.

// Returns (a(0), ..., a(n+1)) for a(k+1) = a(k) + d(k) a(k-1).
template <class S>
std::vector<S> iterate_canonical(const BasicCoefficientSequence<S>& d, std::int64_t n, S a0, S a1) {
    if (n < 0) throw InvalidParams("iterate_canonical needs n >= 0");
    std::vector<S> a;
    a.reserve(static_cast<std::size_t>(n) + 2);
    a.push_back(std::move(a0));
    a.push_back(std::move(a1));
    for (std::int64_t k = 1; k <= n; ++k) {
        a.push_back(a[static_cast<std::size_t>(k)] + d.at(k) * a[static_cast<std::size_t>(k - 1)]);
    }
    return a;
}

// Returns (W(0), ..., W(n+1)).
template <class S>
std::vector<S> iterate_general(const GeneralRecurrence<S>& rec, std::int64_t n) {
    if (n < 0) throw InvalidParams("iterate_general needs n >= 0");
    rec.check_pivots(n);
    std::vector<S> w;
    w.reserve(static_cast<std::size_t>(n) + 2);
    w.push_back(rec.C0);
    w.push_back(rec.C1);
    for (std::int64_t k = 1; k <= n; ++k) {
        w.push_back(rec.A.at(k) * w[static_cast<std::size_t>(k)] +
                    rec.B.at(k) * w[static_cast<std::size_t>(k - 1)]);
    }
    return w;
}

// All tuples (i1, ..., ip) with i1 >= 1, gaps >= 2, ip <= n, in lexicographic
// order. Count is C(n-p+1, p).
std::vector<IndexTuple> enumerate_monomials(std::int64_t n, std::int64_t p);

// The solution of the canonical relation as a multilinear polynomial in the
// d(i) with unit coefficients, in canonical term order (power, then lex).
class SparsePolynomial {
public:
    explicit SparsePolynomial(std::vector<IndexTuple> terms);

    const std::vector<IndexTuple>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // "1 + d1 + d2 + d1*d3"
    std::string str() const;

    template <class S>
    S evaluate(const BasicCoefficientSequence<S>& d) const {
        S total = ScalarTraits<S>::zero();
        for (const IndexTuple& t : terms_) {
            S prod = ScalarTraits<S>::one();
            for (std::int64_t i : t.indices()) prod *= d.at(i);
            total += prod;
        }
        return total;
    }

private:
    std::vector<IndexTuple> terms_;
};

// a(n+1) in symbolic form: the empty tuple plus every power class. Guarded
// at n <= 24 (term count grows like Fibonacci(n+2)).
SparsePolynomial symbolic_solve(std::int64_t n);

Integer binomial(std::int64_t n, std::int64_t k);

// F(1) = F(2) = 1 indexing; F(0) = 0.
Integer fibonacci(std::int64_t n);

}  // namespace trirec
