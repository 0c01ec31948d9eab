#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "trirec/errors.hpp"
#include "trirec/scalar.hpp"

namespace trirec {

// Default domain for sources that do not carry one of their own. Wide enough
// for every solver in this library (orders are guarded at 10^4 anyway).
inline constexpr std::int64_t kDefaultDomainLo = -10000;
inline constexpr std::int64_t kDefaultDomainHi = 10000;

// The map i -> d(i) over a contiguous integer interval [lo, hi]. Access
// outside the domain is a hard error, never a default value: silent zeros
// would mask index-arithmetic bugs in the grid address functions.
template <class S>
class BasicCoefficientSequence {
public:
    struct Table {
        std::vector<S> values;
        std::int64_t start = 1;  // index of values[0]
    };
    struct Constant {
        S value;
    };
    // num(i)/den(i), coefficient lists in ascending degree, evaluated at the
    // integer index. den must be nonzero across the whole domain; that is
    // checked once, at construction.
    struct RationalFunction {
        std::vector<S> num;
        std::vector<S> den;
    };

    static BasicCoefficientSequence table(std::vector<S> values, std::int64_t start = 1) {
        BasicCoefficientSequence seq;
        seq.lo_ = start;
        seq.hi_ = start + static_cast<std::int64_t>(values.size()) - 1;
        seq.source_ = Table{std::move(values), start};
        return seq;
    }

    static BasicCoefficientSequence constant(S value, std::int64_t lo = kDefaultDomainLo,
                                             std::int64_t hi = kDefaultDomainHi) {
        require_interval(lo, hi);
        BasicCoefficientSequence seq;
        seq.lo_ = lo;
        seq.hi_ = hi;
        seq.source_ = Constant{std::move(value)};
        return seq;
    }

    static BasicCoefficientSequence rational_function(std::vector<S> num, std::vector<S> den,
                                                      std::int64_t lo = kDefaultDomainLo,
                                                      std::int64_t hi = kDefaultDomainHi) {
        require_interval(lo, hi);
        if (num.empty() || den.empty()) {
            throw InvalidParams("rational function needs at least one coefficient in num and den");
        }
        if (hi - lo >= 10'000'000) {
            throw InvalidParams("rational function domain too wide for the construction check");
        }
        BasicCoefficientSequence seq;
        seq.lo_ = lo;
        seq.hi_ = hi;
        seq.source_ = RationalFunction{std::move(num), std::move(den)};
        const auto& rf = std::get<RationalFunction>(seq.source_);
        for (std::int64_t i = lo; i <= hi; ++i) {
            if (ScalarTraits<S>::is_zero(eval_poly(rf.den, i))) {
                throw ZeroDenominator("rational function denominator vanishes", i);
            }
        }
        return seq;
    }

    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }

    S at(std::int64_t i) const {
        if (i < lo_ || i > hi_) throw IndexOutOfDomain(i, lo_, hi_);
        return eval_source(i + shift_);
    }

    // View with d'(i) = d(i + offset); the domain moves accordingly.
    BasicCoefficientSequence shifted(std::int64_t offset) const {
        BasicCoefficientSequence seq(*this);
        seq.shift_ += offset;
        seq.lo_ -= offset;
        seq.hi_ -= offset;
        return seq;
    }

    // Contiguous values for [first, last]; out[i - first] = d(i). The whole
    // range is domain-checked up front so kernels can run unchecked.
    std::vector<S> materialize(std::int64_t first, std::int64_t last) const {
        if (first > last) return {};
        if (first < lo_) throw IndexOutOfDomain(first, lo_, hi_);
        if (last > hi_) throw IndexOutOfDomain(last, lo_, hi_);
        std::vector<S> out;
        out.reserve(static_cast<std::size_t>(last - first + 1));
        for (std::int64_t i = first; i <= last; ++i) {
            out.push_back(eval_source(i + shift_));
        }
        return out;
    }

    // Rebuilds the sequence over scalar T (the float64 benchmarking mode).
    // Construction checks rerun in the target arithmetic.
    template <class T>
    BasicCoefficientSequence<T> cast() const {
        if constexpr (std::is_same_v<S, T>) {
            return *this;
        } else {
            using Out = BasicCoefficientSequence<T>;
            Out seq;
            if (const auto* t = std::get_if<Table>(&source_)) {
                seq = Out::table(convert_values<T>(t->values), t->start);
            } else if (const auto* c = std::get_if<Constant>(&source_)) {
                seq = Out::constant(ScalarTraits<T>::from_rational(c->value), lo_ + shift_, hi_ + shift_);
            } else {
                const auto& rf = std::get<RationalFunction>(source_);
                seq = Out::rational_function(convert_values<T>(rf.num), convert_values<T>(rf.den),
                                             lo_ + shift_, hi_ + shift_);
            }
            return seq.shifted(shift_);
        }
    }

private:
    BasicCoefficientSequence() : source_(Constant{ScalarTraits<S>::zero()}) {}

    static void require_interval(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw InvalidParams("domain interval has lo > hi");
    }

    template <class T>
    static std::vector<T> convert_values(const std::vector<S>& in) {
        std::vector<T> out;
        out.reserve(in.size());
        for (const S& v : in) out.push_back(ScalarTraits<T>::from_rational(v));
        return out;
    }

    static S eval_poly(const std::vector<S>& coeffs, std::int64_t i) {
        const S x = ScalarTraits<S>::from_integer(i);
        S acc = ScalarTraits<S>::zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    S eval_source(std::int64_t j) const {
        if (const auto* t = std::get_if<Table>(&source_)) {
            return t->values[static_cast<std::size_t>(j - t->start)];
        }
        if (const auto* c = std::get_if<Constant>(&source_)) {
            return c->value;
        }
        const auto& rf = std::get<RationalFunction>(source_);
        return eval_poly(rf.num, j) / eval_poly(rf.den, j);
    }

    std::variant<Table, Constant, RationalFunction> source_;
    std::int64_t lo_ = 0;
    std::int64_t hi_ = -1;
    std::int64_t shift_ = 0;  // eval_source sees i + shift_

    template <class T>
    friend class BasicCoefficientSequence;
};

using CoefficientSequence = BasicCoefficientSequence<Rational>;

template <class S>
S coeff_at(const BasicCoefficientSequence<S>& seq, std::int64_t i) {
    return seq.at(i);
}

// Parses the JSON coefficient spec (see README for the grammar). Rationals
// are parsed exactly from "p/q" strings.
CoefficientSequence parse_coefficient_spec(std::string_view text);

}  // namespace trirec
