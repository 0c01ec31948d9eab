#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trirec/coefficients.hpp"
#include "trirec/exec.hpp"
#include "trirec/report.hpp"
#include "trirec/rsum.hpp"

namespace trirec {

// Unit step: 1 for x >= 0, else 0. Turns the chained lower bounds of a
// reduced sum into summand factors over a full rectangular grid.
constexpr int heaviside(std::int64_t x) { return x >= 0 ? 1 : 0; }

// Grid extents (N_1, ..., N_k); every entry >= 1.
class DimVector {
public:
    explicit DimVector(std::vector<Integer> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw InvalidParams("dimension vector must not be empty");
        for (const Integer& d : dims_) {
            if (d < 1) throw InvalidParams("dimension extents must be >= 1");
        }
    }

    // Extents of the reduced-sum grid: N_j = order + 2j.
    static DimVector reduced(std::int64_t order, std::int64_t power) {
        if (power < 1) throw InvalidParams("power must be >= 1");
        if (order < -1) throw InvalidParams("order must be >= -1");
        std::vector<Integer> dims;
        dims.reserve(static_cast<std::size_t>(power));
        for (std::int64_t j = 1; j <= power; ++j) dims.emplace_back(order + 2 * j);
        return DimVector(std::move(dims));
    }

    const std::vector<Integer>& dims() const { return dims_; }
    std::size_t size() const { return dims_.size(); }

    Integer grid_size() const {
        Integer total = 1;
        for (const Integer& d : dims_) total *= d;
        return total;
    }

private:
    std::vector<Integer> dims_;
};

namespace detail {

template <class I>
std::string int_str(const I& v) {
    if constexpr (std::is_same_v<I, Integer>) {
        return v.get_str();
    } else {
        return std::to_string(v);
    }
}

}  // namespace detail

// Row-major global index: q = i1 + N1 (i2 - 1) + N1 N2 (i3 - 1) + ...;
// q runs over [1, prod N_j], with q = 1 at the all-ones tuple and the maximum
// at the all-maximal tuple.
template <class I>
I encode(std::span<const I> indices, std::span<const I> dims) {
    if (indices.size() != dims.size() || dims.empty()) {
        throw InvalidParams("encode needs matching non-empty index and dimension vectors");
    }
    I q = I(1);
    I stride = I(1);
    for (std::size_t r = 0; r < dims.size(); ++r) {
        if (indices[r] < I(1) || indices[r] > dims[r]) {
            throw IndexOutOfRange(r + 1, "index " + detail::int_str(indices[r]) + " at position " +
                                             std::to_string(r + 1) + " outside [1, " +
                                             detail::int_str(dims[r]) + "]");
        }
        q += stride * (indices[r] - I(1));
        stride *= dims[r];
    }
    return q;
}

// Inverse of encode, in pure integer quotient/remainder arithmetic.
template <class I>
std::vector<I> decode(I q, std::span<const I> dims) {
    if (dims.empty()) throw InvalidParams("decode needs a non-empty dimension vector");
    I grid = I(1);
    for (const I& d : dims) grid *= d;
    if (q < I(1) || q > grid) {
        throw QOutOfRange("global index " + detail::int_str(q) + " outside [1, " +
                          detail::int_str(grid) + "]");
    }
    std::vector<I> out;
    out.reserve(dims.size());
    I rem = q - I(1);
    for (std::size_t r = 0; r < dims.size(); ++r) {
        I quot = I(rem / dims[r]);
        out.push_back(I(rem - quot * dims[r] + I(1)));
        rem = quot;
    }
    return out;
}

inline Integer encode(const std::vector<Integer>& indices, const DimVector& dims) {
    return encode<Integer>({indices.data(), indices.size()}, {dims.dims().data(), dims.size()});
}

inline std::vector<Integer> decode(const Integer& q, const DimVector& dims) {
    return decode<Integer>(q, {dims.dims().data(), dims.size()});
}

namespace detail {

inline constexpr std::uint64_t kGridHardLimit = std::uint64_t{1} << 62;

// Checks the grid guard and narrows extents to machine words for the kernels.
struct CheckedGrid {
    std::vector<std::uint64_t> dims;
    std::uint64_t total = 0;
};

inline CheckedGrid check_grid(const DimVector& dv, const EvalOptions& opts) {
    const Integer total = dv.grid_size();
    const std::uint64_t limit =
        opts.max_grid < kGridHardLimit ? opts.max_grid : kGridHardLimit;
    if (total > limit) throw GridTooLarge(total.get_str(), limit);
    CheckedGrid out;
    out.dims.reserve(dv.size());
    for (const Integer& d : dv.dims()) out.dims.push_back(d.get_ui());
    out.total = total.get_ui();
    return out;
}

// One ascending pass over q = 1..total. Each fixed-size block is summed
// independently and the block partials are folded in ascending order, so the
// float64 result is identical for any thread count. Index tuples advance by
// carry within a block; block starts are decoded directly.
template <class S>
S masked_grid_sum(const std::vector<S>& vals, const std::vector<std::uint64_t>& dims,
                  std::uint64_t total, const EvalOptions& opts, std::uint64_t* nonzero) {
    const std::size_t k = dims.size();
    const std::uint64_t block = opts.block > 0 ? opts.block : 1;
    const std::uint64_t nblocks = (total + block - 1) / block;
    std::vector<S> partial(static_cast<std::size_t>(nblocks), ScalarTraits<S>::zero());
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(nblocks), 0);

    const auto run_block = [&](std::uint64_t b) {
        const std::uint64_t q0 = b * block + 1;
        const std::uint64_t q1 = std::min(total, (b + 1) * block);
        std::vector<std::uint64_t> idx(k);
        std::uint64_t rem = q0 - 1;
        for (std::size_t r = 0; r < k; ++r) {
            idx[r] = rem % dims[r] + 1;
            rem /= dims[r];
        }
        S acc = ScalarTraits<S>::zero();
        std::uint64_t cnt = 0;
        for (std::uint64_t q = q0;; ++q) {
            std::size_t gap_ok = 1;
            while (gap_ok < k && idx[gap_ok] >= idx[gap_ok - 1] + 2) ++gap_ok;
            if (gap_ok == k) {
                S prod = vals[idx[0] - 1];
                for (std::size_t m = 1; m < k; ++m) prod *= vals[idx[m] - 1];
                acc += prod;
                ++cnt;
            }
            if (q == q1) break;
            for (std::size_t r = 0;; ++r) {
                if (++idx[r] <= dims[r]) break;
                idx[r] = 1;
            }
        }
        partial[static_cast<std::size_t>(b)] = std::move(acc);
        counts[static_cast<std::size_t>(b)] = cnt;
    };

#ifdef _OPENMP
    if (opts.mode == ExecMode::parallel && nblocks > 1) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
            run_block(static_cast<std::uint64_t>(b));
        }
    } else {
        for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
    }
#else
    for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
#endif

    S out = ScalarTraits<S>::zero();
    std::uint64_t nz = 0;
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        out += partial[static_cast<std::size_t>(b)];
        nz += counts[static_cast<std::size_t>(b)];
    }
    if (nonzero) *nonzero += nz;
    return out;
}

}  // namespace detail

// Reduced sum over the full rectangular grid with the gap constraints moved
// into unit-step factors: sums F~ = d(i1) * prod_m [d(i_m) H(i_m - i_{m-1} - 2)]
// over ascending q. Equals rsum_reduced exactly.
template <class S>
S rsum_reduced_flat(const BasicCoefficientSequence<S>& d, std::int64_t order, std::int64_t power,
                    const EvalOptions& opts = {}, EvalStats* stats = nullptr) {
    const DimVector dv = DimVector::reduced(order, power);
    const auto grid = detail::check_grid(dv, opts);
    const std::vector<S> vals = d.materialize(1, order + 2 * power);
    if (stats) {
        stats->grid_points += grid.total;
        stats->has_grid = true;
    }
    std::uint64_t nz = 0;
    S out = detail::masked_grid_sum(vals, grid.dims, grid.total, opts,
                                    stats ? &nz : nullptr);
    if (stats) stats->terms_evaluated += nz;
    return out;
}

// Straight-line reference for the same sum: one decode per grid point, no
// blocking, no carries. Kept serial; the unit tests and the benchmark hold
// the production kernel against it.
template <class S>
S rsum_reduced_flat_reference(const BasicCoefficientSequence<S>& d, std::int64_t order,
                              std::int64_t power, const EvalOptions& opts = {},
                              EvalStats* stats = nullptr) {
    const DimVector dv = DimVector::reduced(order, power);
    const auto grid = detail::check_grid(dv, opts);
    const std::vector<S> vals = d.materialize(1, order + 2 * power);
    if (stats) {
        stats->grid_points += grid.total;
        stats->has_grid = true;
    }
    S total = ScalarTraits<S>::zero();
    for (std::uint64_t q = 1; q <= grid.total; ++q) {
        const std::vector<std::uint64_t> idx =
            decode<std::uint64_t>(q, {grid.dims.data(), grid.dims.size()});
        S term = vals[idx[0] - 1];
        bool open = true;
        for (std::size_t m = 1; m < idx.size(); ++m) {
            if (heaviside(static_cast<std::int64_t>(idx[m]) -
                          static_cast<std::int64_t>(idx[m - 1]) - 2) == 0) {
                open = false;
                break;
            }
            term *= vals[idx[m] - 1];
        }
        if (open) {
            total += term;
            if (stats) ++stats->terms_evaluated;
        }
    }
    return total;
}

// a(n+1) = 1 + sum over power classes of the flat reduced sums.
template <class S>
S solve_flat(const BasicCoefficientSequence<S>& d, std::int64_t n, const EvalOptions& opts = {},
             EvalStats* stats = nullptr) {
    if (n < 0) throw InvalidParams("solve_flat needs n >= 0");
    Integer total_grid = 0;
    for (std::int64_t p = 1; p <= max_power(n); ++p) {
        total_grid += DimVector::reduced(n - 2 * p, p).grid_size();
    }
    const std::uint64_t limit =
        opts.max_grid < detail::kGridHardLimit ? opts.max_grid : detail::kGridHardLimit;
    if (total_grid > limit) throw GridTooLarge(total_grid.get_str(), limit);
    S total = ScalarTraits<S>::one();
    for (std::int64_t p = 1; p <= max_power(n); ++p) {
        total += rsum_reduced_flat(d, n - 2 * p, p, opts, stats);
    }
    return total;
}

}  // namespace trirec
