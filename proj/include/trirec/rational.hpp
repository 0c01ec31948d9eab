#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "trirec/errors.hpp"

namespace trirec {

// Arbitrary-precision integer. GMP supplies the representation; everything in
// the library that needs unbounded counts (grid sizes, global indices) uses this.
using Integer = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Arithmetic is exact; construction and parsing reject zero
// denominators instead of producing a sentinel.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(const Integer& v) : v_(v) {}

    // num/den in any sign combination; reduced and sign-normalized here.
    Rational(const Integer& num, const Integer& den);

    // Accepts "p", "-p", "p/q" with optional sign on either part.
    static Rational parse(std::string_view text);

    // Canonical text form: "p/q", or "p" when the denominator is one.
    std::string str() const { return v_.get_str(); }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

}  // namespace trirec
