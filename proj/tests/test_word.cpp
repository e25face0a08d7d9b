#include <doctest.h>

#include <random>

#include "tandem/errors.hpp"
#include "tandem/oracle.hpp"
#include "tandem/word.hpp"

using namespace tandem;

namespace {
Word W(const char* s, int q = 3) { return Word::parse(s, q); }
}

TEST_CASE("duplication inserts a copy after the block")
{
    CHECK(tandem_duplicate(W("01210"), {1, 3}) == W("01211210"));
    CHECK(tandem_duplicate(W("01211210"), {0, 2}) == W("0101211210"));
    CHECK(tandem_duplicate(W("0"), {0, 1}) == W("00"));
    CHECK_THROWS_AS(tandem_duplicate(W("01"), {1, 2}), DomainError);
}

TEST_CASE("leftmost shortest square")
{
    auto e = find_tandem_repeat(W("0101"), 2);
    REQUIRE(e);
    CHECK(*e == DuplicationEvent{0, 2});
    CHECK_FALSE(find_tandem_repeat(W("01210"), 3));
    e = find_tandem_repeat(W("00"), 3);
    REQUIRE(e);
    CHECK(*e == DuplicationEvent{0, 1});
    // both 1212 and 22 are present; 1212 starts first
    e = find_tandem_repeat(W("012122"), 2);
    REQUIRE(e);
    CHECK(*e == DuplicationEvent{1, 2});
}

TEST_CASE("irreducibility")
{
    CHECK(is_irreducible(W("010"), 2));
    CHECK_FALSE(is_irreducible(W("0101211210"), 3));
    CHECK(is_irreducible(Word(3), 2));
    CHECK(is_irreducible(Word(3), 3));
    CHECK(is_irreducible(W("012012"), 2));
    CHECK_FALSE(is_irreducible(W("012012"), 3));
}

TEST_CASE("irreducibility agrees with the naive scan")
{
    for (std::size_t k : {2u, 3u}) {
        for (std::size_t n = 0; n <= 7; ++n) {
            std::vector<Symbol> s(n, 0);
            while (true) {
                const Word w(s, 3);
                REQUIRE(is_irreducible(w, k) == oracle::naive_irreducible(w, k));
                std::size_t i = 0;
                while (i < n && s[i] == 2) s[i++] = 0;
                if (i == n) break;
                ++s[i];
            }
        }
    }
}

TEST_CASE("root")
{
    CHECK(root(W("0101211210"), DupSystem(3, 3)) == W("01210"));
    CHECK(root(W("201021021"), DupSystem(3, 2)) == W("201021021"));
    CHECK(root(W("0000"), DupSystem(3, 2)) == W("0"));
    CHECK(root(Word(3), DupSystem(3, 2)) == Word(3));
}

TEST_CASE("zeta extension")
{
    CHECK(extend_zeta(W("0"), 3) == W("0000"));
    CHECK(extend_zeta(W("202101"), 0) == W("202101"));
    CHECK(extend_zeta(W("012"), 2) == W("01222"));
}

TEST_CASE("random descendants")
{
    const DupSystem sys(3, 3);
    const Word x = W("01210");
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        const auto d = random_descendant(x, 0, sys, seed);
        CHECK(d.word == x);
        CHECK(d.events.empty());
    }
    const auto d = random_descendant(x, 2, sys, 7);
    REQUIRE(d.events.size() == 2);
    CHECK(d.word.size() == 5 + d.events[0].length + d.events[1].length);
    CHECK(root(d.word, sys) == x);
    CHECK(random_descendant(x, 2, sys, 7).word == d.word);

    // from a single symbol everything stays a run of that symbol
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto r = random_descendant(W("0"), 3, DupSystem(3, 2), seed);
        std::size_t len = 1;
        for (const auto& e : r.events) len += e.length;
        CHECK(r.word == Word(std::vector<Symbol>(len, 0), 3));
    }
}

TEST_CASE("random descendants keep their root" * doctest::description("property"))
{
    std::mt19937_64 rng(4242);
    for (int k : {2, 3}) {
        const DupSystem sys(4, k);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Symbol> s;
            const std::size_t len = 1 + rng() % 12;
            while (s.size() < len) s.push_back(static_cast<Symbol>(rng() % 4));
            const Word y0(s, 4);
            const Word x = root(y0, sys);
            REQUIRE(is_irreducible(x, k));
            const auto d = random_descendant(y0, rng() % 30, sys, rng());
            CHECK(root(d.word, sys) == x);
        }
    }
}

TEST_CASE("word parsing and domain checks")
{
    CHECK(W("0a", 11).str() == "0a");
    CHECK_THROWS_AS(W("3", 3), DomainError);
    CHECK_THROWS_AS(DupSystem(2, 2), DomainError);
    CHECK_THROWS_AS(DupSystem(3, 4), DomainError);
    CHECK(W("01") < W("010"));
    CHECK(W("02") > W("012"));
}
