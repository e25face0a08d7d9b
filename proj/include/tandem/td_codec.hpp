#pragma once

#include <cstddef>
#include <vector>

#include "tandem/bigint.hpp"
#include "tandem/ranking.hpp"
#include "tandem/word.hpp"

namespace tandem {

/// Code C(n, <=k; q): every irreducible root of length i <= n, padded to
/// length n by repeating its last symbol.
struct CodeSpec {
    DupSystem sys;
    std::size_t n;
};

struct Capacity {
    BigInt messages;
    double bits;  ///< log2 of messages
    double rate;  ///< (1/n) log_q of messages
};

/// Messages 1 .. |C| are laid out by ascending root length, then by rank
/// inside Irr(i, q).
class TdCodec {
public:
    explicit TdCodec(CodeSpec spec);

    const CodeSpec& spec() const noexcept { return spec_; }
    const BigInt& size() const noexcept { return offsets_.back(); }

    Word encode(const BigInt& j) const;

    /// Recovers the message from any <=k descendant of a codeword. Words
    /// shorter than n are rejected; a root longer than n raises
    /// NotDescendantError.
    BigInt decode(const Word& y) const;

private:
    CodeSpec spec_;
    IrrRanker ranker_;
    std::vector<BigInt> offsets_;  // offsets_[i] = sum_{r <= i} I(r)
};

Word encode_codeword(const BigInt& j, const CodeSpec& spec);
BigInt decode_codeword(const Word& y, const CodeSpec& spec);
Capacity message_capacity(const CodeSpec& spec);

}  // namespace tandem
