#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trirec/canonical.hpp"
#include "trirec/oracle.hpp"

namespace trirec {

// Numerator/denominator pairs (h(i), k(i)) of the truncated continued
// fraction b0 + num(1)/(den(1) + num(2)/(den(2) + ...)), for i = 0..depth.
// Each side follows the classical recurrence x(i) = den(i) x(i-1) +
// num(i) x(i-2), so both are plain runs of the general recurrence with the
// seeds folded into the initial conditions.
template <class S>
std::vector<std::pair<S, S>> cf_convergents(const S& b0,
                                            const BasicCoefficientSequence<S>& partial_num,
                                            const BasicCoefficientSequence<S>& partial_den,
                                            std::int64_t depth) {
    if (depth < 1) throw InvalidParams("cf_convergents needs depth >= 1");
    // h(-1) = 1, h(0) = b0 and k(-1) = 0, k(0) = 1 become (C0, C1) with
    // W(i) = x(i-1).
    const GeneralRecurrence<S> h(partial_den, partial_num, ScalarTraits<S>::one(), b0);
    const GeneralRecurrence<S> k(partial_den, partial_num, ScalarTraits<S>::zero(),
                                 ScalarTraits<S>::one());
    const std::vector<S> hw = iterate_general(h, depth);
    const std::vector<S> kw = iterate_general(k, depth);
    std::vector<std::pair<S, S>> out;
    out.reserve(static_cast<std::size_t>(depth) + 1);
    for (std::int64_t i = 0; i <= depth; ++i) {
        out.emplace_back(hw[static_cast<std::size_t>(i + 1)], kw[static_cast<std::size_t>(i + 1)]);
    }
    return out;
}

// Grid values of f on x0 + i*step, i = 0..steps+1, for f'' = U f with the
// three-point stencil f'' ~ (f(i+1) - 2 f(i) + f(i-1)) / step^2, i.e.
// A(i) = 2 + step^2 U(i), B = -1. The potential sequence is indexed by grid
// node; x0 only fixes where node 0 sits.
template <class S>
std::vector<S> ode_solve(const BasicCoefficientSequence<S>& potential,
                         [[maybe_unused]] const S& x0, const S& step, const S& f0, const S& f1,
                         std::int64_t steps, Method method = Method::iterative,
                         const EvalOptions& opts = {}) {
    if (steps < 1) throw InvalidParams("ode_solve needs steps >= 1");
    if (!(step > ScalarTraits<S>::zero())) throw InvalidParams("ode_solve needs step > 0");
    const S h2 = step * step;
    const S two = ScalarTraits<S>::from_integer(2);
    std::vector<S> a_values;
    a_values.reserve(static_cast<std::size_t>(steps));
    for (std::int64_t i = 1; i <= steps; ++i) {
        a_values.push_back(two + h2 * potential.at(i));
    }
    const GeneralRecurrence<S> rec(
        BasicCoefficientSequence<S>::table(std::move(a_values), 1),
        BasicCoefficientSequence<S>::constant(-ScalarTraits<S>::one(), 1, steps), f0, f1);
    if (method == Method::iterative) {
        return iterate_general(rec, steps);
    }
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(steps) + 2);
    for (std::int64_t i = 0; i <= steps + 1; ++i) {
        out.push_back(solve_general(rec, i, method, opts));
    }
    return out;
}

}  // namespace trirec
