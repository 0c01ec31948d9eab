#pragma once

#include <cstdint>
#include <utility>

#include "trirec/coefficients.hpp"

namespace trirec {

// W(n+1) = A(n) W(n) + B(n) W(n-1) with W(0) = C0, W(1) = C1.
// A must be nonzero over the evaluation range; callers check with
// check_pivots before dividing by A.
template <class S>
struct GeneralRecurrence {
    BasicCoefficientSequence<S> A;
    BasicCoefficientSequence<S> B;
    S C0;
    S C1;

    GeneralRecurrence(BasicCoefficientSequence<S> a, BasicCoefficientSequence<S> b, S c0, S c1)
        : A(std::move(a)), B(std::move(b)), C0(std::move(c0)), C1(std::move(c1)) {
        if (ScalarTraits<S>::is_zero(C0) && ScalarTraits<S>::is_zero(C1)) {
            throw InvalidParams("C0 = C1 = 0 only produces the zero sequence");
        }
    }

    void check_pivots(std::int64_t n_max) const {
        for (std::int64_t i = 1; i <= n_max; ++i) {
            if (ScalarTraits<S>::is_zero(A.at(i))) throw ZeroPivot(i);
        }
    }
};

}  // namespace trirec
