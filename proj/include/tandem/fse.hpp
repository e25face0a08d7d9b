#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "tandem/bigint.hpp"
#include "tandem/enumeration.hpp"
#include "tandem/word.hpp"

namespace tandem {

/// Materialized labeling: every state with its full, lexicographically
/// sorted neighbor list. The first q^ell entries of a row carry labels
/// 0 .. q^ell - 1; later entries are unlabeled edges.
struct EdgeLabelTable {
    FseParams params;
    BigInt labels;  ///< q^ell
    std::map<Word, std::vector<Word>> rows;
};

constexpr std::size_t kDefaultTableLimit = 1u << 16;

/// Builds the full table. Throws CapacityError when the number of states
/// I(m, q) exceeds state_limit.
EdgeLabelTable build_lookup_table(const FseParams& params,
                                  std::size_t state_limit = kDefaultTableLimit);

/// (ell, m) finite-state encoder on the states Irr_{<=k}(m, q).
///
/// The rank-based backend never lists neighbors: it walks the next state
/// symbol by symbol and counts completions through an ExtensionCounter on
/// the last 2k-1 symbols of the current state, so it keeps O(m) integers.
class FseCodec {
public:
    enum class Backend { lookup_table, rank_based };

    explicit FseCodec(FseParams params, Backend backend = Backend::rank_based,
                      std::size_t state_limit = kDefaultTableLimit);

    const FseParams& params() const noexcept { return params_; }
    Backend backend() const noexcept { return backend_; }
    const Word& start_state() const noexcept { return start_; }
    const BigInt& labels() const noexcept { return labels_; }

    /// All x' with x x' irreducible, sorted.
    std::vector<Word> neighbors(const Word& x) const;

    /// j-th neighbor (1-based) in lexicographic order.
    Word nth_neighbor(const Word& x, const BigInt& j) const;

    /// Position of next in N(x), 1-based. Throws UnlabeledEdgeError when next
    /// is a neighbor past the labeled range and CorruptInputError when it is
    /// not a neighbor at all.
    BigInt neighbor_index(const Word& x, const Word& next) const;

    /// Each block is ell symbols; returns the concatenated states x_1 ... x_s.
    Word encode_stream(std::span<const Word> blocks) const;
    std::vector<Word> decode_stream(const Word& x) const;

    /// Big integers held by the rank-based counting table.
    std::size_t counter_entries() const noexcept { return counter_.table_entries(); }

private:
    void check_state(const Word& x) const;
    BigInt completions(std::vector<Symbol>& window, std::size_t remaining) const;

    FseParams params_;
    Backend backend_;
    BigInt labels_;
    Word start_;
    ExtensionCounter counter_;
    EdgeLabelTable table_;  // populated only for the lookup backend
};

/// Base-q value of a block, most significant symbol first.
BigInt block_value(const Word& block);
Word block_from_value(BigInt value, std::size_t length, int q);

}  // namespace tandem
