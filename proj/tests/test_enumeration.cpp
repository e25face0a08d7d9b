#include <doctest.h>

#include <cmath>

#include "tandem/enumeration.hpp"
#include "tandem/errors.hpp"
#include "tandem/oracle.hpp"

using namespace tandem;

TEST_CASE("count table")
{
    const DupSystem s32(3, 2);
    const std::vector<int> table{1, 3, 6, 12, 18, 30, 48};
    for (std::size_t n = 0; n < table.size(); ++n) CHECK(count_irr(n, s32) == table[n]);
    CHECK(count_irr(2, DupSystem(5, 2)) == 20);
    CHECK(count_irr(6, DupSystem(3, 3)) == 42);
    CHECK(count_irr(5, DupSystem(3, 3)) == 30);
}

TEST_CASE("counts agree with brute force")
{
    for (int q : {3, 4, 5}) {
        for (int k : {2, 3}) {
            const DupSystem sys(q, k);
            const std::size_t max_n = q == 3 ? 10 : (q == 4 ? 8 : 6);
            const CountTable table(sys, max_n);
            for (std::size_t n = 0; n <= max_n; ++n) {
                CAPTURE(q); CAPTURE(k); CAPTURE(n);
                CHECK(table[n] == oracle::enumerate_irr_bruteforce(n, sys).size());
            }
        }
    }
}

TEST_CASE("prefix counts")
{
    const DupSystem sys(3, 2);
    CHECK(count_irr_prefix(Word::parse("010", 3), 3, sys) == 1);
    CHECK(count_irr_prefix(Word::parse("00", 3), 5, sys) == 0);
    // 10201, 10210, 10212; the five continuations of 102 in the state table appear at n = 6
    CHECK(count_irr_prefix(Word::parse("102", 3), 5, sys) == 3);
    CHECK(count_irr_prefix(Word::parse("102", 3), 6, sys) == 5);
    CHECK_THROWS_AS(count_irr_prefix(Word::parse("102", 3), 2, sys), DomainError);
}

TEST_CASE("prefix counts sum to the full count")
{
    for (int k : {2, 3}) {
        const DupSystem sys(3, k);
        for (std::size_t plen = 1; plen <= 3; ++plen) {
            const auto prefixes = oracle::enumerate_irr_bruteforce(plen, sys);
            for (std::size_t n = plen; n <= 10; ++n) {
                BigInt total = 0;
                for (const Word& p : prefixes) total += count_irr_prefix(p, n, sys);
                CAPTURE(k); CAPTURE(plen); CAPTURE(n);
                CHECK(total == count_irr(n, sys));
            }
        }
    }
}

TEST_CASE("prefix counts agree with brute force")
{
    const DupSystem sys(4, 3);
    for (const char* p : {"0", "01", "012", "0102", "01020"}) {
        const Word pw = Word::parse(p, 4);
        const PrefixCountTable table(sys, pw, 8);
        for (std::size_t n = pw.size(); n <= 8; ++n) {
            std::size_t brute = 0;
            for (const Word& w : oracle::enumerate_irr_bruteforce(n, sys))
                if (w.prefix(pw.size()) == pw) ++brute;
            CAPTURE(p); CAPTURE(n);
            CHECK(table[n] == brute);
        }
    }
}

TEST_CASE("extension counter stores O(m) integers and matches direct search")
{
    for (int k : {2, 3}) {
        const DupSystem sys(4, k);
        const ExtensionCounter counter(sys, 40);
        CHECK(counter.table_entries() == static_cast<std::size_t>(k) * 41);
        for (const Word& w : canonical_irreducible_words(2 * k - 1, sys))
            for (std::size_t d = 0; d <= 7; ++d)
                CHECK(counter.count(w.symbols(), d) == count_extensions_direct(w.symbols(), d, sys));
    }
}

TEST_CASE("minimum out-degree")
{
    const DupSystem s32(3, 2);
    CHECK(delta_min_degree(3, s32) == 3);
    CHECK(delta_min_degree(4, s32) == 5);
    CHECK(delta_min_degree(5, s32) == 8);
    CHECK_THROWS_AS(delta_min_degree(2, s32), DomainError);

    struct Case { int k, q; std::size_t m; };
    for (Case c : {Case{2, 3, 3}, Case{2, 3, 4}, Case{2, 3, 5}, Case{2, 4, 3}, Case{2, 4, 4},
                   Case{3, 3, 5}, Case{3, 3, 6}, Case{3, 3, 7}, Case{3, 4, 5}}) {
        const DupSystem sys(c.q, c.k);
        CAPTURE(c.k); CAPTURE(c.q); CAPTURE(c.m);
        CHECK(delta_min_degree(c.m, sys) == oracle::min_outdegree_bruteforce(c.m, sys));
    }
}

TEST_CASE("recursion keeps matching the window minimum")
{
    for (int q : {3, 4, 5}) {
        for (int k : {2, 3}) {
            const DupSystem sys(q, k);
            for (std::size_t m = delta_base_range(sys).first; m <= 20; ++m)
                CHECK(delta_min_degree(m, sys) == delta_by_windows(m, sys));
        }
    }
}

TEST_CASE("printed closed forms")
{
    for (int q : {3, 4, 5, 6}) {
        const DupSystem s2(q, 2), s3(q, 3);
        CHECK(*printed_delta_formula(3, s2) == delta_min_degree(3, s2));
        CHECK(*printed_delta_formula(4, s2) == delta_min_degree(4, s2));
        CHECK(*printed_delta_formula(5, s3) == delta_min_degree(5, s3));
        CHECK(*printed_delta_formula(6, s3) == delta_min_degree(6, s3));
        // the printed m = 7 polynomial does not match exhaustive counting
        CHECK(*printed_delta_formula(7, s3) != delta_min_degree(7, s3));
    }
}

TEST_CASE("asymptotic rates")
{
    CHECK(asymptotic_rate(DupSystem(3, 2)).rate == doctest::Approx(0.4380).epsilon(1e-4));
    CHECK(asymptotic_rate(DupSystem(3, 3)).rate == doctest::Approx(0.347934).epsilon(1e-5));
    CHECK(asymptotic_rate(DupSystem(8, 3)).rate == doctest::Approx(0.9258).epsilon(1e-4));
    CHECK(dominant_root(DupSystem(3, 2)) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    for (int q = 3; q <= 8; ++q) {
        const double lam = dominant_root(DupSystem(q, 3));
        CHECK(((lam - (q - 2)) * lam - (q - 3)) * lam - (q - 2) == doctest::Approx(0).scale(1e3));
    }
}

TEST_CASE("parameter choice")
{
    const FseParams p = choose_params(0.05, DupSystem(3, 2));
    CHECK(p.ell == 6);
    CHECK(p.m == 15);
    const FseParams wide = choose_params(0.2, DupSystem(3, 2));
    CHECK(wide.rate() >= 0.238);
    for (double eps : {0.2, 0.1, 0.05, 0.02}) {
        for (auto [q, k] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 2}, std::pair{3, 3}}) {
            const DupSystem sys(q, k);
            const FseParams f = choose_params(eps, sys);
            CHECK(pow_bigint(q, static_cast<unsigned>(f.ell)) <= delta_min_degree(f.m, sys));
            CHECK(f.rate() >= asymptotic_rate(sys).rate - eps);
        }
    }
    CHECK_THROWS_AS(choose_params(0.0, DupSystem(3, 2)), DomainError);
    CHECK_THROWS_AS(choose_params(0.5, DupSystem(3, 2)), DomainError);
    CHECK_THROWS_AS(make_fse_params(DupSystem(3, 2), 2, 3), DomainError);
    CHECK(make_fse_params(DupSystem(3, 2), 1, 3).ell == 1);
}

TEST_CASE("code sizes")
{
    CHECK(code_size(1, DupSystem(3, 2)) == 3);
    CHECK(code_size(6, DupSystem(3, 2)) == 117);
    CHECK(code_size(3, DupSystem(3, 3)) == 21);
    CHECK(code_size(4, DupSystem(3, 2)) == 39);
}

TEST_CASE("large counts stay exact")
{
    const BigInt c = count_irr(500, DupSystem(3, 2));
    const double r = log_bigint(c) / std::log(3.0) / 500;
    CHECK(std::abs(r - 0.4380) < 0.005);
    // I(n) = 6 F(n) for k = 2, q = 3
    BigInt a = 1, b = 1;
    for (int i = 3; i <= 500; ++i) { BigInt t = a + b; a = b; b = t; }
    CHECK(c == 6 * b);
}
