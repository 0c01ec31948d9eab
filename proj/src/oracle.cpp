#include "trirec/oracle.hpp"

#include <algorithm>

namespace trirec {

namespace {

void extend(std::vector<IndexTuple>& out, std::vector<std::int64_t>& prefix, std::int64_t n,
            std::int64_t remaining) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    // Leave room for the remaining entries: each needs a further +2.
    const std::int64_t first = prefix.empty() ? 1 : prefix.back() + 2;
    const std::int64_t last = n - 2 * (remaining - 1);
    for (std::int64_t i = first; i <= last; ++i) {
        prefix.push_back(i);
        extend(out, prefix, n, remaining - 1);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<IndexTuple> enumerate_monomials(std::int64_t n, std::int64_t p) {
    if (n < 1) throw InvalidParams("enumerate_monomials needs n >= 1");
    if (p < 1 || p > (n + 1) / 2) {
        throw InvalidParams("power class p must satisfy 1 <= p <= floor((n+1)/2)");
    }
    std::vector<IndexTuple> out;
    std::vector<std::int64_t> prefix;
    extend(out, prefix, n, p);
    return out;
}

SparsePolynomial::SparsePolynomial(std::vector<IndexTuple> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    if (std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end()) {
        throw InvalidParams("duplicate monomial: coefficients other than 1 are not representable");
    }
}

std::string SparsePolynomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) out += " + ";
        out += terms_[i].str();
    }
    return out;
}

SparsePolynomial symbolic_solve(std::int64_t n) {
    if (n < 0) throw InvalidParams("symbolic_solve needs n >= 0");
    if (n > 24) throw TooLarge("symbolic expansion beyond n = 24 (term count is Fibonacci(n+2))");
    std::vector<IndexTuple> terms;
    terms.emplace_back();  // the constant term
    for (std::int64_t p = 1; p <= (n + 1) / 2; ++p) {
        auto tuples = enumerate_monomials(n, p);
        terms.insert(terms.end(), std::make_move_iterator(tuples.begin()),
                     std::make_move_iterator(tuples.end()));
    }
    return SparsePolynomial(std::move(terms));
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer fibonacci(std::int64_t n) {
    if (n < 0) throw InvalidParams("fibonacci needs n >= 0");
    Integer out;
    mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

}  // namespace trirec
