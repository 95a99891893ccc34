// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/codec.hpp"
#include "binseq/dataset.hpp"
#include "binseq/error.hpp"
#include "reference.hpp"

#include <doctest.h>

using namespace binseq;

TEST_CASE("decode single digits and padding")
{
    CHECK(decode("D", 4) == Sequence::parse("--+-"));
    CHECK(decode("1D", 5) == Sequence::parse("---+-"));
    CHECK(decode("1", 4) == Sequence::parse("+++-"));
    CHECK(decode("1", 1) == Sequence::parse("-"));
    CHECK(decode("0", 1) == Sequence::parse("+"));
}

TEST_CASE("decode accepts lowercase and interior whitespace")
{
    CHECK(decode("1d", 5) == decode("1D", 5));
    CHECK(decode(" 1 D\t", 5) == decode("1D", 5));
    CHECK(canonical_hex("3db2 77edf") == "3DB277EDF");
}

TEST_CASE("decode drops any amount of leading zero padding")
{
    CHECK(decode("000D", 4) == Sequence::parse("--+-"));
    CHECK(decode("001D", 5) == decode("1D", 5));
}

TEST_CASE("decode errors")
{
    CHECK_THROWS_AS((void)decode("1G", 8), InvalidInput);
    CHECK_THROWS_AS((void)decode("0x1", 4), InvalidInput);
    CHECK_THROWS_AS((void)decode("D", 3), InvalidInput);   // padding bit set
    CHECK_THROWS_AS((void)decode("1D", 4), InvalidInput);  // padding bit set
    CHECK_THROWS_AS((void)decode("D", 5), InvalidInput);   // not enough bits
    CHECK_THROWS_AS((void)decode("D", 0), InvalidInput);
    CHECK_THROWS_AS((void)decode("", 1), InvalidInput);
}

TEST_CASE("encode")
{
    CHECK(encode(Sequence::parse("--+-")) == HexRecord{"D", 4});
    CHECK(encode(Sequence::parse("+++-")) == HexRecord{"1", 4});
    CHECK(encode(Sequence::parse("---+-")) == HexRecord{"1D", 5});
    CHECK(encode(Sequence::parse("+")) == HexRecord{"0", 1});
}

TEST_CASE("decode inverts encode on random sequences")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const auto s = test::random_sequence(rng, test::uniform(rng, 1, 512));
        const auto h = encode(s);
        REQUIRE(h.hex.size() == (s.size() + 3) / 4);
        REQUIRE(decode(h) == s);
    }
}

TEST_CASE("encode reproduces every bundled record's hex")
{
    for (const auto& entry : bundled_records())
    {
        const auto s = decode(entry.hex, entry.length);
        CHECK(encode(s).hex == canonical_hex(entry.hex));
    }
}
