#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "trirec/apps.hpp"
#include "trirec/oracle.hpp"

using namespace trirec;

namespace {
const Rational one(1);

CoefficientSequence ones() { return CoefficientSequence::constant(one); }
}  // namespace

TEST_CASE("all-ones continued fraction walks the Fibonacci ratios") {
    const auto conv = cf_convergents(one, ones(), ones(), 4);
    REQUIRE(conv.size() == 5);
    const std::vector<std::pair<Rational, Rational>> expected{
        {1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}};
    CHECK(conv == expected);
}

TEST_CASE("single-level continued fraction") {
    const auto num = CoefficientSequence::table({Rational(1)});
    const auto den = CoefficientSequence::table({Rational(2)});
    const auto conv = cf_convergents(Rational(0), num, den, 1);
    REQUIRE(conv.size() == 2);
    CHECK(conv[0] == std::pair<Rational, Rational>{0, 1});
    CHECK(conv[1] == std::pair<Rational, Rational>{1, 2});
}

TEST_CASE("periodic continued fraction converges to sqrt(2)") {
    const auto conv = cf_convergents(one, ones(), CoefficientSequence::constant(Rational(2)), 20);
    const auto& [h, k] = conv.back();
    const double c20 = h.to_double() / k.to_double();
    CHECK(std::abs(c20 - std::sqrt(2.0)) < 1e-7);
}

TEST_CASE("determinant identity of the convergent pair") {
    testutil::Rng rng(81);
    for (int rep = 0; rep < 10; ++rep) {
        const auto num = testutil::random_nonzero_table(rng, 1, 20);
        const auto den = testutil::random_nonzero_table(rng, 1, 20);
        const Rational b0 = rng.rational();
        const auto conv = cf_convergents(b0, num, den, 20);
        Rational num_prod = one;
        for (std::int64_t i = 1; i <= 20; ++i) {
            num_prod *= num.at(i);
            const auto& [hi, ki] = conv[static_cast<std::size_t>(i)];
            const auto& [hp, kp] = conv[static_cast<std::size_t>(i - 1)];
            const Rational sign((i - 1) % 2 == 0 ? 1 : -1);
            CHECK(hi * kp - hp * ki == sign * num_prod);
        }
    }
}

TEST_CASE("continued fraction surfaces zero partial denominators") {
    const auto den = CoefficientSequence::table({Rational(1), Rational(0), Rational(1)});
    CHECK_THROWS_AS(cf_convergents(one, ones(), den, 3), ZeroPivot);
}

TEST_CASE("zero potential reproduces the straight line exactly") {
    const Rational h(Integer(1), Integer(4));
    const auto zero_pot = CoefficientSequence::constant(Rational(0));
    const auto f = ode_solve(zero_pot, Rational(0), h, Rational(0), h, 6);
    REQUIRE(f.size() == 8);
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(f[i] == Rational(static_cast<long>(i)) * h);
    }
}

TEST_CASE("single step applies the stencil once") {
    const auto pot = CoefficientSequence::constant(Rational(3));
    const Rational h(Integer(1), Integer(2));
    const auto f = ode_solve(pot, Rational(0), h, Rational(1), Rational(2), 1);
    REQUIRE(f.size() == 3);
    // f(2) = (2 + h^2 U) f(1) - f(0)
    CHECK(f[2] == (Rational(2) + h * h * Rational(3)) * Rational(2) - Rational(1));
}

TEST_CASE("second-order convergence on f'' = f") {
    const auto run = [](std::int64_t steps) {
        const double h = 1.0 / static_cast<double>(steps);
        const auto pot = BasicCoefficientSequence<double>::constant(1.0);
        const auto f = ode_solve(pot, 0.0, h, 1.0, std::exp(h), steps);
        double err = 0.0;
        for (std::int64_t i = 0; i <= steps; ++i) {
            err = std::max(err, std::abs(f[static_cast<std::size_t>(i)] -
                                         std::exp(static_cast<double>(i) * h)));
        }
        return err;
    };
    const double ratio = run(10) / run(20);
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
}

TEST_CASE("every engine produces the same grid") {
    testutil::Rng rng(82);
    for (int rep = 0; rep < 5; ++rep) {
        // nonnegative potential keeps every pivot 2 + h^2 U(i) away from zero
        std::vector<Rational> u;
        for (int i = 0; i < 8; ++i) {
            const Rational r = rng.rational();
            u.push_back(r < Rational(0) ? -r : r);
        }
        const auto pot = CoefficientSequence::table(std::move(u));
        const Rational h(Integer(1), Integer(rng.uniform(2, 5)));
        const Rational f0 = rng.rational();
        Rational f1 = rng.rational();
        if (f0.is_zero() && f1.is_zero()) f1 = one;
        const auto base = ode_solve(pot, Rational(0), h, f0, f1, 8);
        for (const Method method : {Method::rsum, Method::flat, Method::closed}) {
            CHECK(ode_solve(pot, Rational(0), h, f0, f1, 8, method) == base);
        }
    }
}

TEST_CASE("ode_solve surfaces a vanishing pivot with its node index") {
    // 2 + h^2 U(i) = 0 at node 2 when h = 1 and U(2) = -2
    const auto pot = CoefficientSequence::table({Rational(1), Rational(-2), Rational(1)});
    try {
        ode_solve(pot, Rational(0), one, Rational(1), Rational(1), 3);
        FAIL("expected ZeroPivot");
    } catch (const ZeroPivot& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("ode_solve validation") {
    const auto pot = CoefficientSequence::constant(Rational(0));
    CHECK_THROWS_AS(ode_solve(pot, Rational(0), one, one, one, 0), InvalidParams);
    CHECK_THROWS_AS(ode_solve(pot, Rational(0), Rational(0), one, one, 3), InvalidParams);
    CHECK_THROWS_AS(ode_solve(pot, Rational(0), Rational(-1), one, one, 3), InvalidParams);
}
