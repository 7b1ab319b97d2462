#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bitstring.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"
#include "phasor_dominance.hpp"

using namespace cvdj;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sign assignments validate balance") {
    CHECK_NOTHROW(SignAssignment({1, -1, -1, 1}));
    CHECK_THROWS_AS(SignAssignment({1, 1, -1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignAssignment({1, -1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignAssignment({1, -1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignAssignment({}), std::invalid_argument);
    const SignAssignment g = SignAssignment::from_bitstring(BitString::parse("0110"));
    CHECK(g.sign(0) == 1);
    CHECK(g.sign(1) == -1);
    CHECK_THROWS_AS(SignAssignment::from_bitstring(BitString::parse("0111")),
                    std::invalid_argument);
}

TEST_CASE("N=4 signed sums reduce to the textbook trig forms") {
    const auto s1 = SignAssignment::from_bitstring(BitString::parse("0011"));
    const auto s2 = SignAssignment::from_bitstring(BitString::parse("0101"));
    const auto s3 = SignAssignment::from_bitstring(BitString::parse("0110"));
    for (double x = 0.0; x <= kPi / 2 + 1e-12; x += kPi / 64) {
        const double p1 = 0.75 * x, p2 = 0.25 * x;
        const Complex e1{0.0, 2.0 * (std::sin(p1) + std::sin(p2))};
        const Complex e2{0.0, 2.0 * (std::sin(p1) - std::sin(p2))};
        const Complex e3{2.0 * (std::cos(p1) - std::cos(p2)), 0.0};
        CHECK(std::abs(signed_sum(s1, x) - e1) < 1e-13);
        CHECK(std::abs(signed_sum(s2, x) - e2) < 1e-13);
        CHECK(std::abs(signed_sum(s3, x) - e3) < 1e-13);
    }
}

TEST_CASE("N=4 proof orderings hold pointwise on the window") {
    const auto s1 = SignAssignment::from_bitstring(BitString::parse("0011"));
    const auto s2 = SignAssignment::from_bitstring(BitString::parse("0101"));
    const auto s3 = SignAssignment::from_bitstring(BitString::parse("0110"));
    for (int i = 0; i <= 2000; ++i) {
        const double x = (kPi / 2) * i / 2000.0;
        const double a1 = std::abs(signed_sum(s1, x));
        CHECK(a1 >= std::abs(signed_sum(s2, x)) - 1e-12);
        CHECK(a1 >= std::abs(signed_sum(s3, x)) - 1e-12);
    }
}

TEST_CASE("complement assignments have identical moduli") {
    const BitString z = BitString::parse("01100110");
    const auto g = SignAssignment::from_bitstring(z);
    const auto gc = SignAssignment::from_bitstring(z.complement());
    for (double x : {0.1, 0.9, 1.4}) {
        CHECK(std::abs(signed_sum(g, x)) == std::abs(signed_sum(gc, x)));
    }
}

TEST_CASE("dominance verification across small N") {
    for (std::size_t n : {4u, 6u, 8u}) {
        const DominanceReport rep = verify_asb_dominance(n, 501);
        CHECK(rep.holds);
        CHECK(rep.worst_margin > 0.0);
        CHECK_FALSE(rep.witness.has_value());
        CHECK(rep.strings_checked ==
              testref::binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2)));
        CHECK(rep.grid_points == 501);
    }
}

TEST_CASE("dominance at N=2 holds vacuously") {
    const DominanceReport rep = verify_asb_dominance(2, 101);
    CHECK(rep.holds);
    CHECK(rep.worst_margin == 0.0);
    CHECK(rep.strings_checked == 2);
    CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("dominance margin matches a direct recomputation at N=4") {
    const DominanceReport rep = verify_asb_dominance(4, 401);
    const auto s1 = SignAssignment::from_bitstring(BitString::parse("0011"));
    const auto s2 = SignAssignment::from_bitstring(BitString::parse("0101"));
    const auto s3 = SignAssignment::from_bitstring(BitString::parse("0110"));
    double margin = 1e300;
    for (int i = 1; i <= 400; ++i) {
        const double x = (kPi / 2) * i / 400.0;
        const double a1 = std::abs(signed_sum(s1, x));
        margin = std::min(margin, a1 - std::abs(signed_sum(s2, x)));
        margin = std::min(margin, a1 - std::abs(signed_sum(s3, x)));
    }
    CHECK(rep.worst_margin == doctest::Approx(margin).epsilon(1e-12));
}

TEST_CASE("guardrails") {
    CHECK_THROWS_AS(verify_asb_dominance(18, 101), LimitError);
    CHECK_THROWS_AS(verify_asb_dominance(3, 101), std::invalid_argument);
    CHECK_THROWS_AS(verify_asb_dominance(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_asb_dominance(4, 101, -1.0), std::invalid_argument);
}
