#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tandem/bigint.hpp"
#include "tandem/word.hpp"

namespace tandem {

/// Coefficients c_1..c_k of I(n) = sum_r c_r I(n - r):
/// (q-2, q-2) for k = 2 and (q-2, q-3, q-2) for k = 3.
std::vector<int> recurrence_coefficients(const DupSystem& sys);

/// First length at which the suffix bijections (and hence the recursion)
/// apply: 4 for k = 2, 6 for k = 3.
std::size_t recursion_start(const DupSystem& sys);

/// Exact values I_{<=k}(n, q) for n in [0, max_n].
class CountTable {
public:
    CountTable(DupSystem sys, std::size_t max_n);

    const DupSystem& system() const noexcept { return sys_; }
    std::size_t max_length() const noexcept { return values_.size() - 1; }
    const BigInt& operator[](std::size_t n) const;

private:
    DupSystem sys_;
    std::vector<BigInt> values_;
};

BigInt count_irr(std::size_t n, const DupSystem& sys);

/// Number of irreducible words of length n that start with a fixed prefix p,
/// for n in [|p|, max_n]. Lengths below first_recursive_length() are counted
/// by direct extension; the rest follow the prefix recursion.
class PrefixCountTable {
public:
    PrefixCountTable(DupSystem sys, Word prefix, std::size_t max_n);

    const DupSystem& system() const noexcept { return sys_; }
    const Word& prefix() const noexcept { return prefix_; }
    std::size_t max_length() const noexcept { return prefix_.size() + values_.size() - 1; }
    std::size_t first_recursive_length() const noexcept { return first_recursive_; }
    const BigInt& operator[](std::size_t n) const;

private:
    DupSystem sys_;
    Word prefix_;
    std::size_t first_recursive_;
    std::vector<BigInt> values_;  // values_[i] is the count at length |p| + i
};

BigInt count_irr_prefix(const Word& p, std::size_t n, const DupSystem& sys);

/// Counts irreducible continuations of an irreducible word from its last
/// 2k-1 symbols alone.
///
/// The continuation counts obey the same linear recursion as I(n), so they
/// are a combination of k fixed basis sequences weighted by the first k
/// counts, which are found by direct search over at most q^(k-1) tails.
/// Only the basis sequences are stored: k * (max_extension + 1) integers.
class ExtensionCounter {
public:
    ExtensionCounter(DupSystem sys, std::size_t max_extension);

    const DupSystem& system() const noexcept { return sys_; }
    std::size_t max_extension() const noexcept { return max_extension_; }

    /// Number of words w of length d such that context + w is irreducible.
    /// The context must be irreducible and at least k symbols long.
    BigInt count(std::span<const Symbol> context, std::size_t d) const;

    /// Number of stored big integers.
    std::size_t table_entries() const noexcept;

private:
    DupSystem sys_;
    std::size_t max_extension_;
    std::vector<std::vector<BigInt>> basis_;  // basis_[i][d]
};

/// Count of words w of length d with context + w irreducible, by plain
/// depth-first search. Exponential in d; used for short base cases.
std::size_t count_extensions_direct(std::span<const Symbol> context, std::size_t d,
                                    const DupSystem& sys);

/// Irreducible words of the given length, up to renaming of symbols
/// (first occurrences appear in the order 0, 1, 2, ...).
std::vector<Word> canonical_irreducible_words(std::size_t length, const DupSystem& sys);

/// Lengths m whose minimum out-degree seeds the recursion:
/// [3, 4] for k = 2 and [5, 7] for k = 3.
std::pair<std::size_t, std::size_t> delta_base_range(const DupSystem& sys);

/// Minimum out-degree over all states, computed for any m >= 2k-1 as the
/// least continuation count over every possible boundary window.
BigInt delta_by_windows(std::size_t m, const DupSystem& sys);

/// Minimum out-degree Delta_{<=k}(m, q) of the state graph on Irr_{<=k}(m, q):
/// window minimum on the base range, then the linear recursion.
BigInt delta_min_degree(std::size_t m, const DupSystem& sys);

/// The closed forms for the base values of Delta as they are usually
/// quoted, evaluated literally. Empty outside the base range.
std::optional<BigInt> printed_delta_formula(std::size_t m, const DupSystem& sys);

struct RateInfo {
    DupSystem sys;
    double lambda;  ///< dominant root of the count recursion
    double rate;    ///< log_q lambda
    double kappa;   ///< largest constant with Delta(m) >= kappa * lambda^m on the base range
};

/// Dominant root: closed form for k = 2, bisection on [1, q] for k = 3.
double dominant_root(const DupSystem& sys);

RateInfo asymptotic_rate(const DupSystem& sys);

struct FseParams {
    DupSystem sys;
    double epsilon;  ///< 0 when the lengths were given directly
    std::size_t ell;
    std::size_t m;

    double rate() const { return static_cast<double>(ell) / static_cast<double>(m); }
};

/// Message length ell and state length m achieving rate >= rate - epsilon
/// with q^ell <= Delta(m). Both conditions are verified exactly.
FseParams choose_params(double epsilon, const DupSystem& sys);

/// Validates user supplied lengths: m in the Delta range and q^ell <= Delta(m).
FseParams make_fse_params(const DupSystem& sys, std::size_t ell, std::size_t m);

/// |C(n, <=k; q)| = sum_{i=1}^{n} I(i, q).
BigInt code_size(std::size_t n, const DupSystem& sys);

}  // namespace tandem
