#include "tandem/word.hpp"

#include <algorithm>
#include <random>

#include "tandem/errors.hpp"

namespace tandem {

namespace {

char symbol_char(Symbol s)
{
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

int char_symbol(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

void check_alphabet(int q)
{
    if (q < 2 || q > kMaxAlphabet)
        throw DomainError("alphabet size must be in [2, 36], got " + std::to_string(q));
}

// True iff x[i, i+t) == x[i+t, i+2t).
bool is_square_at(std::span<const Symbol> x, std::size_t i, std::size_t t)
{
    return std::equal(x.begin() + i, x.begin() + i + t, x.begin() + i + t);
}

// Leftmost-shortest square starting at or after `from`.
std::optional<DuplicationEvent> scan_from(std::span<const Symbol> x, std::size_t k,
                                          std::size_t from)
{
    const std::size_t n = x.size();
    for (std::size_t i = from; i + 1 < n; ++i) {
        for (std::size_t t = 1; t <= k && i + 2 * t <= n; ++t) {
            if (is_square_at(x, i, t)) return DuplicationEvent{i, t};
        }
    }
    return std::nullopt;
}

// Uniform draw from [0, bound) without modulo bias; the standard
// distributions are not specified bit-for-bit across library vendors.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

}  // namespace

Word::Word(int q) : q_(q) { check_alphabet(q); }

Word::Word(std::vector<Symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q)
{
    check_alphabet(q);
    for (Symbol s : symbols_) {
        if (s >= q) throw DomainError("symbol out of range for alphabet size " + std::to_string(q));
    }
}

Word Word::parse(std::string_view text, int q)
{
    check_alphabet(q);
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        const int s = char_symbol(c);
        if (s < 0 || s >= q)
            throw DomainError(std::string("invalid symbol '") + c + "' for alphabet size " +
                              std::to_string(q));
        symbols.push_back(static_cast<Symbol>(s));
    }
    return Word(std::move(symbols), q);
}

Word Word::prefix(std::size_t n) const
{
    if (n > size()) throw DomainError("prefix longer than word");
    return Word({symbols_.begin(), symbols_.begin() + n}, q_);
}

Word Word::suffix(std::size_t n) const
{
    if (n > size()) throw DomainError("suffix longer than word");
    return Word({symbols_.end() - n, symbols_.end()}, q_);
}

Word Word::substr(std::size_t pos, std::size_t n) const
{
    if (pos + n > size()) throw DomainError("substring out of range");
    return Word({symbols_.begin() + pos, symbols_.begin() + pos + n}, q_);
}

Word Word::drop_back(std::size_t n) const { return prefix(size() - std::min(n, size())); }

Word Word::reversed() const { return Word({symbols_.rbegin(), symbols_.rend()}, q_); }

void Word::push_back(Symbol s)
{
    if (s >= q_) throw DomainError("symbol out of range");
    symbols_.push_back(s);
}

void Word::append(const Word& other)
{
    if (other.q_ != q_) throw DomainError("alphabet mismatch");
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

std::string Word::str() const
{
    std::string out;
    out.reserve(size());
    for (Symbol s : symbols_) out.push_back(symbol_char(s));
    return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                  b.symbols_.begin(), b.symbols_.end());
}

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.append(b);
    return out;
}

DupSystem::DupSystem(int q, int k) : q_(q), k_(k)
{
    if (q < 3 || q > kMaxAlphabet)
        throw DomainError("q must be in [3, 36], got " + std::to_string(q));
    if (k != 2 && k != 3) throw DomainError("k must be 2 or 3, got " + std::to_string(k));
}

Word tandem_duplicate(const Word& x, DuplicationEvent e)
{
    if (e.length == 0 || e.position + e.length > x.size())
        throw DomainError("duplication event out of range");
    const auto s = x.symbols();
    std::vector<Symbol> out;
    out.reserve(s.size() + e.length);
    out.insert(out.end(), s.begin(), s.begin() + e.position + e.length);
    out.insert(out.end(), s.begin() + e.position, s.end());
    return Word(std::move(out), x.alphabet());
}

std::optional<DuplicationEvent> find_tandem_repeat(const Word& x, std::size_t k)
{
    if (k == 0) throw DomainError("k must be positive");
    return scan_from(x.symbols(), k, 0);
}

bool is_irreducible(const Word& x, std::size_t k) { return !find_tandem_repeat(x, k); }

Word root(const Word& y, const DupSystem& sys)
{
    const auto k = static_cast<std::size_t>(sys.k());
    std::vector<Symbol> w(y.symbols().begin(), y.symbols().end());
    std::size_t from = 0;
    while (auto e = scan_from(w, k, from)) {
        w.erase(w.begin() + e->position + e->length, w.begin() + e->position + 2 * e->length);
        // The prefix before the removed copy was square-free; only squares
        // reaching into the splice point can be new.
        from = e->position > 2 * k ? e->position - 2 * k : 0;
    }
    return Word(std::move(w), y.alphabet());
}

Word extend_zeta(const Word& x, std::size_t i)
{
    if (x.empty()) throw DomainError("extend_zeta needs a nonempty word");
    Word out = x;
    const Symbol z = x.back();
    for (std::size_t r = 0; r < i; ++r) out.push_back(z);
    return out;
}

Descendant random_descendant(const Word& x, std::size_t t, const DupSystem& sys,
                             std::uint64_t seed)
{
    if (x.alphabet() != sys.q()) throw DomainError("alphabet mismatch");
    if (t > 0 && x.empty()) throw DomainError("cannot duplicate inside the empty word");
    std::mt19937_64 rng(seed);
    Descendant out{x, {}};
    out.events.reserve(t);
    for (std::size_t step = 0; step < t; ++step) {
        const std::size_t n = out.word.size();
        const std::size_t max_len = std::min<std::size_t>(sys.k(), n);
        const std::size_t len = 1 + draw_below(rng, max_len);
        const std::size_t pos = draw_below(rng, n - len + 1);
        const DuplicationEvent e{pos, len};
        out.word = tandem_duplicate(out.word, e);
        out.events.push_back(e);
    }
    return out;
}

}  // namespace tandem
