#pragma once

#include <concepts>
#include <cstdint>

#include "trirec/rational.hpp"

namespace trirec {

// The solvers are generic over the scalar: Rational is the default (all
// identities hold exactly and are tested exactly), double is the opt-in
// benchmarking mode.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static const char* name() { return "rational"; }
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_integer(std::int64_t v) { return Rational(static_cast<long>(v)); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static double to_double(const Rational& v) { return v.to_double(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static const char* name() { return "float64"; }
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_integer(std::int64_t v) { return static_cast<double>(v); }
    static double from_rational(const Rational& r) { return r.to_double(); }
    static bool is_zero(double v) { return v == 0.0; }
    static double to_double(double v) { return v; }
};

template <class S>
concept Scalar = requires(const S& a) {
    { ScalarTraits<S>::zero() } -> std::same_as<S>;
    { ScalarTraits<S>::one() } -> std::same_as<S>;
    { ScalarTraits<S>::is_zero(a) } -> std::same_as<bool>;
};

}  // namespace trirec
