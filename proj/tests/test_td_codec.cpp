#include <doctest.h>

#include <random>
#include <map>
#include <set>

#include "tandem/errors.hpp"
#include "tandem/oracle.hpp"
#include "tandem/td_codec.hpp"

using namespace tandem;

TEST_CASE("first codeword and capacity")
{
    const CodeSpec spec{DupSystem(3, 2), 4};
    CHECK(encode_codeword(1, spec) == Word::parse("0000", 3));
    CHECK(decode_codeword(Word::parse("0000", 3), spec) == 1);
    CHECK(message_capacity(CodeSpec{DupSystem(3, 2), 6}).messages == 117);
    CHECK(message_capacity(CodeSpec{DupSystem(3, 2), 1}).messages == 3);
    const Capacity c = message_capacity(CodeSpec{DupSystem(3, 2), 500});
    CHECK(std::abs(c.rate - 0.4380) < 0.01);
}

TEST_CASE("exhaustive round trip")
{
    for (int k : {2, 3}) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const TdCodec codec(CodeSpec{DupSystem(3, k), n});
            std::set<Word> seen;
            for (BigInt j = 1; j <= codec.size(); ++j) {
                const Word x = codec.encode(j);
                REQUIRE(x.size() == n);
                REQUIRE(codec.decode(x) == j);
                seen.insert(x);
            }
            CHECK(seen.size() == codec.size());
        }
    }
    CHECK(TdCodec(CodeSpec{DupSystem(3, 2), 4}).size() == 39);
}

TEST_CASE("descendant cones are disjoint")
{
    const CodeSpec spec{DupSystem(3, 2), 4};
    const TdCodec codec(spec);
    std::map<Word, BigInt> owner;
    for (BigInt j = 1; j <= codec.size(); ++j) {
        for (const Word& y : oracle::descendants_within(codec.encode(j), 2, spec.sys)) {
            auto [it, fresh] = owner.emplace(y, j);
            REQUIRE((fresh || it->second == j));
        }
    }
}

TEST_CASE("decoding after random duplications")
{
    std::mt19937_64 rng(8);
    for (int k : {2, 3}) {
        const TdCodec codec(CodeSpec{DupSystem(3, k), 8});
        for (int trial = 0; trial < 1000; ++trial) {
            const BigInt j = 1 + BigInt(rng()) % codec.size();
            const auto d = random_descendant(codec.encode(j), 10, codec.spec().sys, rng());
            REQUIRE(codec.decode(d.word) == j);
        }
    }
}

TEST_CASE("rejections")
{
    const TdCodec codec(CodeSpec{DupSystem(3, 2), 4});
    CHECK_THROWS_AS(codec.decode(Word::parse("01202", 3)), NotDescendantError);
    CHECK_THROWS_AS(codec.decode(Word::parse("012", 3)), CorruptInputError);
    CHECK_THROWS_AS(codec.encode(0), DomainError);
    CHECK_THROWS_AS(codec.encode(40), DomainError);
}
