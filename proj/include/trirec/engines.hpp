#pragma once

#include <cstdint>

#include "trirec/closedform.hpp"
#include "trirec/convolve.hpp"
#include "trirec/oracle.hpp"
#include "trirec/report.hpp"
#include "trirec/rsum.hpp"

namespace trirec {

// a(m) of the canonical relation with unit initials, via the chosen route.
template <class S>
S canonical_term(Method method, const BasicCoefficientSequence<S>& d, std::int64_t m,
                 const EvalOptions& opts = {}, EvalStats* stats = nullptr) {
    if (m < 0) throw InvalidParams("canonical_term needs m >= 0");
    if (m <= 1) return ScalarTraits<S>::one();
    switch (method) {
        case Method::iterative: {
            if (stats) stats->terms_evaluated += static_cast<std::uint64_t>(m - 1);
            auto a = iterate_canonical(d, m - 1, ScalarTraits<S>::one(), ScalarTraits<S>::one());
            return a.back();
        }
        case Method::rsum:
            return solve_via_rsum(d, m - 1, stats);
        case Method::flat:
            return solve_flat(d, m - 1, opts, stats);
        case Method::closed:
            return solve_closed_form(d, m - 1, opts, stats);
    }
    throw InvalidParams("unknown method");
}

// Engine adapter with the (sequence, m) -> a(m) shape used by solve_general.
template <class S>
auto make_engine(Method method, EvalOptions opts = {}) {
    return [method, opts](const BasicCoefficientSequence<S>& d, std::int64_t m) {
        return canonical_term<S>(method, d, m, opts);
    };
}

}  // namespace trirec
