#include "trirec/rational.hpp"

#include <cctype>

namespace trirec {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw ZeroDenominator("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ZeroDenominator("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

namespace {

// [sign] digits; returns one-past-the-end of the run, or `pos` when malformed.
std::size_t scan_integer(std::string_view text, std::size_t pos) {
    std::size_t i = pos;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    const std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i == digits_start ? pos : i;
}

Integer make_integer(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const std::size_t num_end = scan_integer(text, 0);
    if (num_end == 0) {
        throw ParseError("expected rational literal", 0);
    }
    if (num_end == text.size()) {
        Rational r;
        r.v_ = mpq_class(make_integer(text));
        return r;
    }
    if (text[num_end] != '/') {
        throw ParseError("unexpected character in rational literal", num_end);
    }
    const std::size_t den_start = num_end + 1;
    const std::size_t den_end = scan_integer(text, den_start);
    if (den_end == den_start || den_end != text.size()) {
        throw ParseError("malformed denominator in rational literal", den_start);
    }
    const Integer den = make_integer(text.substr(den_start));
    if (sgn(den) == 0) {
        throw ParseError("zero denominator in rational literal", den_start);
    }
    Rational r;
    r.v_ = mpq_class(make_integer(text.substr(0, num_end)), den);
    r.v_.canonicalize();
    return r;
}

}  // namespace trirec
