#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <stdexcept>

#include "bitstring.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"

using namespace cvdj;

TEST_CASE("parse and text round-trip") {
    const BitString z = BitString::parse("0110");
    CHECK(z.size() == 4);
    CHECK(z.bit(0) == 0);
    CHECK(z.bit(1) == 1);
    CHECK(z.sign(0) == 1.0);
    CHECK(z.sign(1) == -1.0);
    CHECK(z.str() == "0110");
    CHECK(BitString::parse("1").str() == "1");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(BitString::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BitString::parse("01x0"), std::invalid_argument);
    CHECK_THROWS_AS(BitString::parse("0 1"), std::invalid_argument);
    CHECK_THROWS_AS(BitString(std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(BitString(std::vector<std::uint8_t>{}), std::invalid_argument);
}

TEST_CASE("classification") {
    CHECK(classify(BitString::parse("0000")) == PromiseClass::Constant);
    CHECK(classify(BitString::parse("1111")) == PromiseClass::Constant);
    CHECK(classify(BitString::parse("0")) == PromiseClass::Constant);
    CHECK(classify(BitString::parse("0101")) == PromiseClass::Balanced);
    CHECK(classify(BitString::parse("01")) == PromiseClass::Balanced);
    CHECK(classify(BitString::parse("0111")) == PromiseClass::Neither);
    CHECK(classify(BitString::parse("001")) == PromiseClass::Neither);  // odd length, mixed
    CHECK(to_string(PromiseClass::Constant) == std::string("constant"));
}

TEST_CASE("complement is an involution and flips every bit") {
    const BitString z = BitString::parse("001101");
    const BitString c = z.complement();
    CHECK(c.str() == "110010");
    CHECK(c.complement() == z);
    CHECK(classify(c) == classify(z));  // balanced stays balanced
}

TEST_CASE("block pair") {
    const auto [low, high] = asb_pair(6);
    CHECK(low.str() == "000111");
    CHECK(high.str() == "111000");
    CHECK(high == low.complement());
    CHECK(classify(low) == PromiseClass::Balanced);
    CHECK_THROWS_AS(asb_pair(5), std::invalid_argument);
    CHECK_THROWS_AS(asb_pair(0), std::invalid_argument);
}

TEST_CASE("balanced enumeration matches the binomial count") {
    for (std::size_t n : {2u, 4u, 6u, 8u, 10u, 12u}) {
        const auto all = enumerate_balanced(n);
        CHECK(all.size() == testref::binomial(static_cast<unsigned>(n),
                                              static_cast<unsigned>(n / 2)));
        // Every string balanced, all distinct, lexicographically increasing.
        std::set<std::string> seen;
        for (const BitString& z : all) {
            CHECK(classify(z) == PromiseClass::Balanced);
            seen.insert(z.str());
        }
        CHECK(seen.size() == all.size());
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
        // Endpoints are the two block strings.
        const auto [low, high] = asb_pair(n);
        CHECK(all.front() == low);
        CHECK(all.back() == high);
    }
}

TEST_CASE("enumeration guardrails") {
    CHECK_THROWS_AS(enumerate_balanced(26), LimitError);
    CHECK_THROWS_AS(enumerate_balanced(3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_balanced(0), std::invalid_argument);
    // The cap itself is inclusive.
    BalancedEnumerator ok(24);
    CHECK(ok.next().has_value());
    // for_each visits the same count as the materialized version.
    std::size_t count = 0;
    for_each_balanced(8, [&](const BitString&) { ++count; });
    CHECK(count == 70);
}
