#pragma once

#include <cstdint>
#include <string_view>

#include "trirec/errors.hpp"

namespace trirec {

// The four evaluation routes. All agree exactly in rational mode; the point
// of keeping all of them is cross-validation and cost comparison.
enum class Method { iterative, rsum, flat, closed };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::iterative: return "iterative";
        case Method::rsum: return "rsum";
        case Method::flat: return "flat";
        case Method::closed: return "closed";
    }
    return "?";
}

inline Method parse_method(std::string_view s) {
    if (s == "iter" || s == "iterative") return Method::iterative;
    if (s == "rsum") return Method::rsum;
    if (s == "flat") return Method::flat;
    if (s == "closed") return Method::closed;
    throw InvalidParams("unknown method \"" + std::string(s) + "\" (expected iter|rsum|flat|closed)");
}

inline constexpr Method kAllMethods[] = {Method::iterative, Method::rsum, Method::flat,
                                         Method::closed};

// Work accounting for one evaluation. terms_evaluated counts scalar terms
// actually accumulated (recurrence steps for the iterative route, monomials
// for the others); grid_points counts visited q values and is only set by
// the flat/closed routes.
struct EvalStats {
    std::uint64_t terms_evaluated = 0;
    std::uint64_t grid_points = 0;
    bool has_grid = false;
};

}  // namespace trirec
