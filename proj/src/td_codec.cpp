#include "tandem/td_codec.hpp"

#include <algorithm>
#include <cmath>

#include "tandem/enumeration.hpp"
#include "tandem/errors.hpp"

namespace tandem {

TdCodec::TdCodec(CodeSpec spec) : spec_(spec), ranker_(spec.sys, std::max<std::size_t>(spec.n, 1))
{
    if (spec_.n < 1) throw DomainError("code length must be positive");
    offsets_.assign(spec_.n + 1, BigInt(0));
    for (std::size_t i = 1; i <= spec_.n; ++i) offsets_[i] = offsets_[i - 1] + ranker_.count(i);
}

Word TdCodec::encode(const BigInt& j) const
{
    if (j < 1 || j > size())
        throw DomainError("message " + to_string(j) + " outside [1, " + to_string(size()) + "]");
    // First root length whose cumulative count reaches j.
    const auto it = std::lower_bound(offsets_.begin() + 1, offsets_.end(), j);
    const auto i = static_cast<std::size_t>(it - offsets_.begin());
    const Word r = ranker_.unrank(i, j - offsets_[i - 1]);
    return extend_zeta(r, spec_.n - i);
}

BigInt TdCodec::decode(const Word& y) const
{
    if (y.alphabet() != spec_.sys.q()) throw CorruptInputError("alphabet mismatch");
    if (y.size() < spec_.n)
        throw CorruptInputError("received word shorter than the code length");
    const Word r = root(y, spec_.sys);
    if (r.size() > spec_.n || r.empty())
        throw NotDescendantError("root of length " + std::to_string(r.size()) +
                                 " cannot belong to a codeword of length " +
                                 std::to_string(spec_.n));
    return offsets_[r.size() - 1] + ranker_.rank(r);
}

Word encode_codeword(const BigInt& j, const CodeSpec& spec) { return TdCodec(spec).encode(j); }

BigInt decode_codeword(const Word& y, const CodeSpec& spec) { return TdCodec(spec).decode(y); }

Capacity message_capacity(const CodeSpec& spec)
{
    const BigInt messages = code_size(spec.n, spec.sys);
    const double ln = log_bigint(messages);
    return {messages, ln / std::log(2.0),
            ln / (static_cast<double>(spec.n) * std::log(static_cast<double>(spec.sys.q())))};
}

}  // namespace tandem
