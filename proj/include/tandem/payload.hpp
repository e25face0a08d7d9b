#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tandem/bigint.hpp"
#include "tandem/fse.hpp"
#include "tandem/td_codec.hpp"
#include "tandem/word.hpp"

// Byte payloads <-> strands of irreducible words.
//
// A payload is framed as an 8-byte big-endian bit count followed by the
// data bytes, read as one bit stream (most significant bit first). The
// stream is cut into fixed-size chunks, zero padded at the end, and every
// chunk becomes one message for the underlying encoder.
namespace tandem::payload {

using Bytes = std::vector<std::uint8_t>;
using Bits = std::vector<std::uint8_t>;  // one 0/1 value per entry

constexpr std::size_t kHeaderBits = 64;

Bits frame(std::span<const std::uint8_t> data);
/// Inverse of frame; trailing padding after the announced length is ignored.
Bytes unframe(std::span<const std::uint8_t> bits);

BigInt bits_to_value(std::span<const std::uint8_t> bits);
void append_value_bits(Bits& out, const BigInt& value, std::size_t width);

/// Largest B with 2^B <= messages.
std::size_t chunk_bits_for(const BigInt& messages);

// One strand per chunk; message = chunk value + 1.
std::vector<Word> encode_code(std::span<const std::uint8_t> data, const TdCodec& codec);
Bytes decode_code(const std::vector<Word>& strands, const TdCodec& codec);

struct FseLayout {
    std::size_t group_blocks;  ///< encoder blocks per chunk
    std::size_t chunk_bits;    ///< largest B with 2^B <= q^(group_blocks * ell)
};

/// Groups enough blocks that each chunk carries roughly 64 bits.
FseLayout fse_layout(const FseParams& params);

/// blocks_per_strand == 0 puts the whole payload on one strand.
std::vector<Word> encode_fse(std::span<const std::uint8_t> data, const FseCodec& codec,
                             std::size_t blocks_per_strand = 0);
/// Each strand is reduced to its root first, so strands that went
/// through the duplication channel decode too.
Bytes decode_fse(const std::vector<Word>& strands, const FseCodec& codec);

/// Raw message digits (length a multiple of ell) to one encoded strand.
Word encode_fse_digits(const Word& digits, const FseCodec& codec);
Word decode_fse_digits(const Word& strand, const FseCodec& codec);

}  // namespace tandem::payload
