#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tandem/bigint.hpp"
#include "tandem/word.hpp"

namespace tandem {

// Suffix bijections. "The i-th symbol of Sigma_q minus S" always means
// ascending numeric order, counted from 1.

/// k = 2, three-distinct-suffix class: appends the i-th symbol outside the
/// last two symbols of x.
Word apply_phi(const Word& x, int i);
std::pair<Word, int> invert_phi(const Word& y);

/// k = 2, two-distinct-suffix class: appends sigma then repeats the last
/// symbol of x; sigma is the i-th symbol outside the last two of x.
Word apply_psi(const Word& x, int i);
std::pair<Word, int> invert_psi(const Word& y);

struct Preimage {
    Word word;
    int index;
    int branch;  ///< 1, 2 or 3: number of symbols the map appended
};

/// k = 3 maps. Branch 1 appends one symbol (x_n != x_{n-3}); branches 2 and 3
/// append two and three symbols and produce the words with x_n = x_{n-3}.
/// Writing the tail of the image as u v A B C A, branch 3 is the case
/// C = u (u != A) or C = v (u = A); branch 2 is everything else.
Word apply_phi123(const Word& x, int i, int branch);
Preimage invert_phi123(const Word& y);

/// Counts big-integer arithmetic steps performed by rank/unrank.
struct OpCounter {
    std::size_t bigint_ops = 0;
};

/// Rank/unrank over Irr_{<=k}(n, q), optionally restricted to a fixed prefix.
///
/// Order: short lengths (below the bijection range) are lexicographic;
/// longer lengths list the branch-1 image block first, then branch 2, then
/// branch 3, and inside a block the appended-symbol index varies fastest.
/// Ranks are 1-based.
class IrrRanker {
public:
    IrrRanker(DupSystem sys, std::size_t max_n);
    IrrRanker(DupSystem sys, Word prefix, std::size_t max_n);

    const DupSystem& system() const noexcept { return sys_; }
    const Word& prefix() const noexcept { return prefix_; }
    std::size_t max_length() const noexcept { return counts_.size() - 1; }

    /// Number of words of length n in the ranked set.
    const BigInt& count(std::size_t n) const;

    Word unrank(std::size_t n, const BigInt& j, OpCounter* ops = nullptr) const;
    BigInt rank(const Word& x, OpCounter* ops = nullptr) const;

private:
    Word lex_unrank(std::size_t n, BigInt j) const;
    BigInt lex_rank(const Word& x) const;
    Word apply(const Word& x, int index, int branch) const;
    Preimage invert(const Word& y) const;

    DupSystem sys_;
    Word prefix_;
    std::vector<int> coeffs_;
    std::size_t base_limit_;              // lengths below this are lexicographic
    std::vector<BigInt> counts_;          // indexed by length
    std::vector<std::vector<Word>> base_; // sorted base-case words, when small enough
};

Word unrank_irr(std::size_t n, const BigInt& j, const DupSystem& sys);
BigInt rank_irr(const Word& x, const DupSystem& sys);

Word unrank_irr_prefix(const Word& p, std::size_t n, const BigInt& j, const DupSystem& sys);
BigInt rank_irr_prefix(const Word& p, const Word& x, const DupSystem& sys);

}  // namespace tandem
