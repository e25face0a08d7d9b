#include "tandem/payload.hpp"

#include <cmath>

#include "tandem/errors.hpp"

namespace tandem::payload {

Bits frame(std::span<const std::uint8_t> data)
{
    Bits bits;
    bits.reserve(kHeaderBits + 8 * data.size());
    const std::uint64_t length = 8 * static_cast<std::uint64_t>(data.size());
    for (int i = 63; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((length >> i) & 1u));
    for (std::uint8_t byte : data) {
        for (int i = 7; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((byte >> i) & 1u));
    }
    return bits;
}

Bytes unframe(std::span<const std::uint8_t> bits)
{
    if (bits.size() < kHeaderBits) throw CorruptInputError("payload shorter than its header");
    std::uint64_t length = 0;
    for (std::size_t i = 0; i < kHeaderBits; ++i) length = (length << 1) | bits[i];
    if (length % 8 != 0) throw CorruptInputError("payload length is not a whole number of bytes");
    if (length > bits.size() - kHeaderBits)
        throw CorruptInputError("payload header announces " + std::to_string(length) +
                                " bits but only " + std::to_string(bits.size() - kHeaderBits) +
                                " are present");
    Bytes out(length / 8, 0);
    for (std::size_t i = 0; i < length; ++i)
        out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | bits[kHeaderBits + i]);
    return out;
}

BigInt bits_to_value(std::span<const std::uint8_t> bits)
{
    BigInt v = 0;
    for (std::uint8_t b : bits) v = (v << 1) | b;
    return v;
}

void append_value_bits(Bits& out, const BigInt& value, std::size_t width)
{
    if (value != 0 && boost::multiprecision::msb(value) >= width)
        throw CorruptInputError("chunk value wider than the chunk size");
    for (std::size_t i = width; i-- > 0;)
        out.push_back(boost::multiprecision::bit_test(value, static_cast<unsigned>(i)) ? 1 : 0);
}

std::size_t chunk_bits_for(const BigInt& messages)
{
    if (messages < 2) throw DomainError("code carries less than one bit per strand");
    return boost::multiprecision::msb(messages);
}

namespace {

std::vector<BigInt> chunk_values(std::span<const std::uint8_t> data, std::size_t chunk)
{
    Bits bits = frame(data);
    bits.resize((bits.size() + chunk - 1) / chunk * chunk, 0);
    std::vector<BigInt> values;
    values.reserve(bits.size() / chunk);
    for (std::size_t pos = 0; pos < bits.size(); pos += chunk)
        values.push_back(bits_to_value(std::span(bits).subspan(pos, chunk)));
    return values;
}

void check_chunk(const BigInt& value, std::size_t chunk)
{
    if (value != 0 && boost::multiprecision::msb(value) >= chunk)
        throw CorruptInputError("decoded chunk exceeds the chunk size");
}

}  // namespace

std::vector<Word> encode_code(std::span<const std::uint8_t> data, const TdCodec& codec)
{
    const std::size_t chunk = chunk_bits_for(codec.size());
    std::vector<Word> strands;
    for (const BigInt& v : chunk_values(data, chunk)) strands.push_back(codec.encode(v + 1));
    return strands;
}

Bytes decode_code(const std::vector<Word>& strands, const TdCodec& codec)
{
    const std::size_t chunk = chunk_bits_for(codec.size());
    Bits bits;
    for (std::size_t i = 0; i < strands.size(); ++i) {
        BigInt v;
        try {
            v = codec.decode(strands[i]) - 1;
            check_chunk(v, chunk);
        } catch (const CorruptInputError& e) {
            throw CorruptInputError("strand " + std::to_string(i + 1) + ": " + e.what());
        }
        append_value_bits(bits, v, chunk);
    }
    return unframe(bits);
}

FseLayout fse_layout(const FseParams& params)
{
    const double bits_per_block =
        static_cast<double>(params.ell) * std::log2(static_cast<double>(params.sys.q()));
    const auto group = static_cast<std::size_t>(std::max(1.0, std::ceil(64.0 / bits_per_block)));
    const BigInt capacity = pow_bigint(params.sys.q(), static_cast<unsigned>(group * params.ell));
    return {group, static_cast<std::size_t>(boost::multiprecision::msb(capacity))};
}

std::vector<Word> encode_fse(std::span<const std::uint8_t> data, const FseCodec& codec,
                             std::size_t blocks_per_strand)
{
    const FseParams& p = codec.params();
    const FseLayout layout = fse_layout(p);
    std::vector<Word> blocks;
    for (const BigInt& v : chunk_values(data, layout.chunk_bits)) {
        const Word digits = block_from_value(v, layout.group_blocks * p.ell, p.sys.q());
        for (std::size_t b = 0; b < layout.group_blocks; ++b)
            blocks.push_back(digits.substr(b * p.ell, p.ell));
    }
    if (blocks_per_strand == 0) blocks_per_strand = blocks.size();
    std::vector<Word> strands;
    for (std::size_t pos = 0; pos < blocks.size(); pos += blocks_per_strand) {
        const std::size_t count = std::min(blocks_per_strand, blocks.size() - pos);
        strands.push_back(codec.encode_stream(std::span(blocks).subspan(pos, count)));
    }
    return strands;
}

Bytes decode_fse(const std::vector<Word>& strands, const FseCodec& codec)
{
    const FseParams& p = codec.params();
    const FseLayout layout = fse_layout(p);
    Word digits(p.sys.q());
    for (std::size_t i = 0; i < strands.size(); ++i) {
        try {
            for (const Word& b : codec.decode_stream(root(strands[i], p.sys))) digits.append(b);
        } catch (const CorruptInputError& e) {
            throw CorruptInputError("strand " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    const std::size_t group_len = layout.group_blocks * p.ell;
    if (digits.size() % group_len != 0)
        throw CorruptInputError("decoded block count is not a multiple of the chunk group");
    Bits bits;
    for (std::size_t pos = 0; pos < digits.size(); pos += group_len) {
        const BigInt v = block_value(digits.substr(pos, group_len));
        check_chunk(v, layout.chunk_bits);
        append_value_bits(bits, v, layout.chunk_bits);
    }
    return unframe(bits);
}

Word encode_fse_digits(const Word& digits, const FseCodec& codec)
{
    const std::size_t ell = codec.params().ell;
    if (digits.size() % ell != 0)
        throw DomainError("message length must be a multiple of ell = " + std::to_string(ell));
    std::vector<Word> blocks;
    for (std::size_t pos = 0; pos < digits.size(); pos += ell) blocks.push_back(digits.substr(pos, ell));
    return codec.encode_stream(blocks);
}

Word decode_fse_digits(const Word& strand, const FseCodec& codec)
{
    Word out(codec.params().sys.q());
    for (const Word& b : codec.decode_stream(root(strand, codec.params().sys))) out.append(b);
    return out;
}

}  // namespace tandem::payload
