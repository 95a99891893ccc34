// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/codec.hpp"
#include "binseq/dataset.hpp"
#include "binseq/error.hpp"
#include "binseq/skew.hpp"
#include "reference.hpp"

#include <doctest.h>

#include <set>

using namespace binseq;
using binseq::test::barker13;

TEST_CASE("expand small cases")
{
    CHECK(expand(HalfSequence::parse("+")) == Sequence::parse("+"));
    CHECK(expand(HalfSequence::parse("++")) == Sequence::parse("++-"));
    CHECK(expand(HalfSequence::parse("+++++--")) == barker13);
    CHECK_THROWS_AS(HalfSequence({}), InvalidInput);
}

TEST_CASE("expand agrees with the direct 1-based construction")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial)
    {
        const auto h = test::random_half(rng, test::uniform(rng, 1, 256));
        const std::vector<int> hv(h.values().begin(), h.values().end());
        CHECK(test::to_ints(expand(h)) == test::naive_expand(hv));
    }
}

TEST_CASE("is_skew_symmetric")
{
    CHECK(is_skew_symmetric(barker13));
    CHECK_FALSE(is_skew_symmetric(test::barker4));
    CHECK(is_skew_symmetric(Sequence::parse("+")));
    CHECK_FALSE(is_skew_symmetric(Sequence::parse("+++")));
    CHECK(is_skew_symmetric(Sequence::parse("++-")));
}

TEST_CASE("contract")
{
    CHECK(contract(barker13) == HalfSequence::parse("+++++--"));
    CHECK_THROWS_AS((void)contract(test::barker4), InvalidInput);
    CHECK_THROWS_AS((void)contract(Sequence::parse("+++")), InvalidInput);

    const auto row = bundled_records().front();
    REQUIRE(row.length == 301);
    CHECK(contract(decode(row.hex, row.length)).size() == 151);

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const auto h = test::random_half(rng, test::uniform(rng, 1, 256));
        CHECK(contract(expand(h)) == h);
    }
}

TEST_CASE("expanded sequences have zero odd lags and forced energy parity")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const auto h = test::random_half(rng, test::uniform(rng, 1, 256));
        const auto s = expand(h);
        const auto p = autocorrelations(s);
        for (std::size_t k = 1; k < s.size(); k += 2)
            REQUIRE(p.lag(k) == 0);
        CHECK(p.energy % 2 == static_cast<std::int64_t>(((s.size() - 1) / 2) % 2));
    }
}

TEST_CASE("expand is injective")
{
    // All 2^10 half sequences of length 10 expand to distinct sequences.
    std::set<std::string> seen;
    for (unsigned mask = 0; mask < (1u << 10); ++mask)
    {
        std::vector<std::int8_t> v(10);
        for (unsigned i = 0; i < 10; ++i)
            v[i] = (mask >> i) & 1 ? -1 : 1;
        seen.insert(expand(HalfSequence(v)).to_string());
    }
    CHECK(seen.size() == 1024);
}
