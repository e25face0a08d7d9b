#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tandem {

using Symbol = std::uint8_t;

constexpr int kMaxAlphabet = 36;

/// A finite word over the alphabet {0, ..., q-1}.
///
/// The alphabet size travels with the value; operations that combine two
/// words reject mismatched alphabets.
class Word {
public:
    Word() = default;
    explicit Word(int q);
    Word(std::vector<Symbol> symbols, int q);

    /// Parses digits 0-9 then a-z (so q <= 36).
    static Word parse(std::string_view text, int q);

    int alphabet() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    /// d-th symbol counted from the end, d >= 1.
    Symbol back(std::size_t d = 1) const { return symbols_[symbols_.size() - d]; }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    Word prefix(std::size_t n) const;
    Word suffix(std::size_t n) const;
    Word substr(std::size_t pos, std::size_t n) const;
    /// Drops the last n symbols.
    Word drop_back(std::size_t n) const;
    Word reversed() const;

    void push_back(Symbol s);
    void append(const Word& other);

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    /// Lexicographic on symbols (alphabet compared first).
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Symbol> symbols_;
    int q_ = 2;
};

Word concat(const Word& a, const Word& b);

/// One tandem duplication: the block [position, position + length) is
/// copied immediately after itself.
struct DuplicationEvent {
    std::size_t position = 0;
    std::size_t length = 1;

    friend bool operator==(const DuplicationEvent&, const DuplicationEvent&) = default;
};

/// Duplication system parameters: alphabet size q >= 3 and maximal
/// duplication length k in {2, 3}.
class DupSystem {
public:
    DupSystem(int q, int k);

    int q() const noexcept { return q_; }
    int k() const noexcept { return k_; }

    friend bool operator==(const DupSystem&, const DupSystem&) = default;

private:
    int q_;
    int k_;
};

Word tandem_duplicate(const Word& x, DuplicationEvent e);

/// Leftmost (then shortest) square ww with |w| <= k, reported as the event
/// that would have created it.
std::optional<DuplicationEvent> find_tandem_repeat(const Word& x, std::size_t k);

bool is_irreducible(const Word& x, std::size_t k);

/// The unique <=k root of y, by greedy leftmost-shortest deduplication.
Word root(const Word& y, const DupSystem& sys);

/// x z^i where z is the last symbol of x.
Word extend_zeta(const Word& x, std::size_t i);

struct Descendant {
    Word word;
    std::vector<DuplicationEvent> events;
};

/// Applies t random duplications. Each event draws its length uniformly
/// from [1, min(k, |w|)] and then its position uniformly among valid
/// positions. Deterministic in seed.
Descendant random_descendant(const Word& x, std::size_t t, const DupSystem& sys,
                             std::uint64_t seed);

}  // namespace tandem
