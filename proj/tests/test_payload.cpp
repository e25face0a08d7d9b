#include <doctest.h>

#include <random>
#include <sstream>

#include "tandem/errors.hpp"
#include "tandem/payload.hpp"
#include "tandem/seqfile.hpp"

using namespace tandem;
using namespace tandem::payload;

namespace {
Bytes random_bytes(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Bytes out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}
}

TEST_CASE("framing header is big-endian bit length")
{
    const Bytes data{0xA5, 0x01};
    const Bits bits = frame(data);
    REQUIRE(bits.size() == 64 + 16);
    CHECK(bits_to_value(std::span(bits).first(64)) == 16);
    CHECK(bits_to_value(std::span(bits).subspan(64, 8)) == 0xA5);
    CHECK(unframe(bits) == data);
    Bits padded = bits;
    padded.resize(bits.size() + 7, 0);
    CHECK(unframe(padded) == data);
    CHECK(unframe(frame({})).empty());
    CHECK_THROWS_AS(unframe(std::span(bits).first(70)), CorruptInputError);
}

TEST_CASE("code mode round trip")
{
    const TdCodec codec(CodeSpec{DupSystem(4, 3), 64});
    for (std::size_t size : {0u, 1u, 17u, 1024u}) {
        const Bytes data = random_bytes(size, size);
        const auto strands = encode_code(data, codec);
        for (const Word& s : strands) CHECK(s.size() == 64);
        CHECK(decode_code(strands, codec) == data);
    }
}

TEST_CASE("code mode survives the channel")
{
    const TdCodec codec(CodeSpec{DupSystem(4, 3), 64});
    const Bytes data = random_bytes(300, 3);
    auto strands = encode_code(data, codec);
    for (std::size_t i = 0; i < strands.size(); ++i)
        strands[i] = random_descendant(strands[i], 100, codec.spec().sys, i).word;
    CHECK(decode_code(strands, codec) == data);
}

TEST_CASE("fse mode round trip")
{
    const FseCodec codec(choose_params(0.1, DupSystem(4, 3)));
    const Bytes data = random_bytes(1024, 9);
    for (std::size_t per : {0u, 7u}) {
        auto strands = encode_fse(data, codec, per);
        CHECK(decode_fse(strands, codec) == data);
        for (std::size_t i = 0; i < strands.size(); ++i)
            strands[i] = random_descendant(strands[i], 20, codec.params().sys, i).word;
        CHECK(decode_fse(strands, codec) == data);
    }
}

TEST_CASE("fse digits")
{
    const FseCodec codec(FseParams{DupSystem(3, 2), 0.0, 1, 3});
    const Word x = encode_fse_digits(Word::parse("012", 3), codec);
    CHECK(x == Word::parse("201021021", 3));
    CHECK(decode_fse_digits(x, codec) == Word::parse("012", 3));
}

TEST_CASE("corrupted strands are reported")
{
    const TdCodec codec(CodeSpec{DupSystem(3, 2), 8});
    auto strands = encode_code(Bytes{1, 2, 3}, codec);
    strands[1] = Word::parse("012012012", 3);
    CHECK_THROWS_WITH_AS(decode_code(strands, codec), doctest::Contains("strand 2"), CorruptInputError);
}

TEST_CASE("sequence files")
{
    const std::vector<Word> ws{Word::parse("0123", 4), Word::parse("3210", 4)};
    std::ostringstream out;
    write_sequence_file(out, ws, SymbolEncoding::dna);
    CHECK(out.str() == "ACGT\nTGCA\n");
    std::istringstream in("ACGT\n\nTGCA\n");
    CHECK(read_sequence_file(in, 4, SymbolEncoding::dna) == ws);
    std::istringstream bad("ACGT\nACXT\n");
    CHECK_THROWS_WITH_AS(read_sequence_file(bad, 4, SymbolEncoding::dna), doctest::Contains("line 2"),
                         CorruptInputError);
    CHECK_THROWS(parse_word("AC", 3, SymbolEncoding::dna));
    for (int q = 3; q <= 10; ++q) {
        Word w(q);
        for (int a = 0; a < q; ++a) w.push_back(static_cast<Symbol>(a));
        CHECK(parse_word(format_word(w, SymbolEncoding::digits), q, SymbolEncoding::digits) == w);
    }
}
