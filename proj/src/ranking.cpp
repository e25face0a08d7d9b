#include "tandem/ranking.hpp"

#include <algorithm>
#include <initializer_list>

#include "squares.hpp"
#include "tandem/enumeration.hpp"
#include "tandem/errors.hpp"

namespace tandem {

namespace {

constexpr std::size_t kMaxMaterializedBase = 1u << 18;

bool excluded(std::initializer_list<Symbol> set, Symbol s)
{
    return std::find(set.begin(), set.end(), s) != set.end();
}

// i-th (1-based) symbol of {0..q-1} outside `set`.
Symbol nth_outside(int q, std::initializer_list<Symbol> set, int i)
{
    if (i < 1) throw DomainError("map index must be positive");
    int seen = 0;
    for (int a = 0; a < q; ++a) {
        if (excluded(set, static_cast<Symbol>(a))) continue;
        if (++seen == i) return static_cast<Symbol>(a);
    }
    throw DomainError("map index " + std::to_string(i) + " out of range");
}

// 1-based position of s among symbols outside `set`.
int index_outside(std::initializer_list<Symbol> set, Symbol s)
{
    if (excluded(set, s)) throw DomainError("word is not in the image of this map");
    int idx = 1;
    for (int a = 0; a < s; ++a) {
        if (!excluded(set, static_cast<Symbol>(a))) ++idx;
    }
    return idx;
}

Word with(const Word& x, std::initializer_list<Symbol> tail)
{
    Word out = x;
    for (Symbol s : tail) out.push_back(s);
    return out;
}

void require_irreducible(const Word& x, int k)
{
    if (!is_irreducible(x, static_cast<std::size_t>(k))) throw DomainError("word is not irreducible");
}

void require_length(const Word& x, std::size_t n)
{
    if (x.size() < n) throw DomainError("word too short for this map");
}

// Unchecked forms of the maps; callers guarantee length and irreducibility.

Word phi(const Word& x, int i)
{
    return with(x, {nth_outside(x.alphabet(), {x.back(2), x.back(1)}, i)});
}

std::pair<Word, int> phi_inverse(const Word& y)
{
    return {y.drop_back(1), index_outside({y.back(3), y.back(2)}, y.back(1))};
}

Word psi(const Word& x, int i)
{
    return with(x, {nth_outside(x.alphabet(), {x.back(2), x.back(1)}, i), x.back(1)});
}

std::pair<Word, int> psi_inverse(const Word& y)
{
    return {y.drop_back(2), index_outside({y.back(4), y.back(3)}, y.back(2))};
}

// Branch 1, x = ... a b c: exclude {a, c} when a != c, else {b, c}.
Word phi1(const Word& x, int i)
{
    const Symbol a = x.back(3), b = x.back(2), c = x.back(1);
    const Symbol s = a != c ? nth_outside(x.alphabet(), {a, c}, i)
                            : nth_outside(x.alphabet(), {b, c}, i);
    return with(x, {s});
}

// Branch 2, x = ... u v A B: append C A with C outside {u, A, B} when
// v == B or u is not in {A, B}; otherwise outside {v, A, B}.
Word phi2(const Word& x, int i)
{
    const Symbol u = x.back(4), v = x.back(3), a = x.back(2), b = x.back(1);
    const bool use_u = v == b || (u != a && u != b);
    const Symbol c = use_u ? nth_outside(x.alphabet(), {u, a, b}, i)
                           : nth_outside(x.alphabet(), {v, a, b}, i);
    return with(x, {c, a});
}

// Branch 3, x = ... u v A: append B u A with B outside {u, A} when u != A,
// otherwise append B v A with B outside {v, A}.
Word phi3(const Word& x, int i)
{
    const Symbol u = x.back(3), v = x.back(2), a = x.back(1);
    if (u != a) return with(x, {nth_outside(x.alphabet(), {u, a}, i), u, a});
    return with(x, {nth_outside(x.alphabet(), {v, a}, i), v, a});
}

Preimage phi123_inverse(const Word& y)
{
    // y = ... u v A B C L with A = x_{n-3}, L = x_n.
    const Symbol last = y.back(1), a = y.back(4);
    if (last != a) {
        const Word x = y.drop_back(1);
        const Symbol xa = x.back(3), xb = x.back(2), xc = x.back(1);
        const int i = xa != xc ? index_outside({xa, xc}, last) : index_outside({xb, xc}, last);
        return {x, i, 1};
    }
    const Symbol u = y.back(6), v = y.back(5), b = y.back(3), c = y.back(2);
    if ((u != a && c == u) || (u == a && c == v)) {
        const int i = u != a ? index_outside({u, a}, b) : index_outside({v, a}, b);
        return {y.drop_back(3), i, 3};
    }
    const bool use_u = v == b || (u != a && u != b);
    const int i = use_u ? index_outside({u, a, b}, c) : index_outside({v, a, b}, c);
    return {y.drop_back(2), i, 2};
}

void collect_lex(std::vector<Symbol>& w, std::size_t n, const DupSystem& sys,
                 std::vector<Word>& out)
{
    if (w.size() == n) {
        out.emplace_back(w, sys.q());
        return;
    }
    for (int a = 0; a < sys.q(); ++a) {
        w.push_back(static_cast<Symbol>(a));
        if (!detail::ends_with_square(w, sys.k())) collect_lex(w, n, sys, out);
        w.pop_back();
    }
}

}  // namespace

Word apply_phi(const Word& x, int i)
{
    require_length(x, 2);
    require_irreducible(x, 2);
    return phi(x, i);
}

std::pair<Word, int> invert_phi(const Word& y)
{
    require_length(y, 4);
    require_irreducible(y, 2);
    if (y.back(1) == y.back(3)) throw DomainError("suffix has two distinct symbols; not a phi image");
    return phi_inverse(y);
}

Word apply_psi(const Word& x, int i)
{
    require_length(x, 2);
    require_irreducible(x, 2);
    return psi(x, i);
}

std::pair<Word, int> invert_psi(const Word& y)
{
    require_length(y, 4);
    require_irreducible(y, 2);
    if (y.back(1) != y.back(3)) throw DomainError("suffix has three distinct symbols; not a psi image");
    return psi_inverse(y);
}

Word apply_phi123(const Word& x, int i, int branch)
{
    require_irreducible(x, 3);
    switch (branch) {
    case 1: require_length(x, 3); return phi1(x, i);
    case 2:
        if (x.alphabet() == 3) throw DomainError("branch 2 is empty for q = 3");
        require_length(x, 4);
        return phi2(x, i);
    case 3: require_length(x, 3); return phi3(x, i);
    default: throw DomainError("branch must be 1, 2 or 3");
    }
}

Preimage invert_phi123(const Word& y)
{
    require_length(y, 6);
    require_irreducible(y, 3);
    return phi123_inverse(y);
}

IrrRanker::IrrRanker(DupSystem sys, std::size_t max_n) : IrrRanker(sys, Word(sys.q()), max_n) {}

IrrRanker::IrrRanker(DupSystem sys, Word prefix, std::size_t max_n)
    : sys_(sys), prefix_(std::move(prefix)), coeffs_(recurrence_coefficients(sys))
{
    if (prefix_.alphabet() != sys.q()) throw DomainError("alphabet mismatch");
    if (!is_irreducible(prefix_, sys.k())) throw DomainError("prefix is not irreducible");
    if (max_n < prefix_.size()) throw DomainError("maximum length shorter than prefix");
    base_limit_ = std::max(prefix_.size() + sys.k(), recursion_start(sys));

    counts_.assign(max_n + 1, BigInt(0));
    if (prefix_.empty()) {
        const CountTable table(sys, max_n);
        for (std::size_t n = 0; n <= max_n; ++n) counts_[n] = table[n];
    } else {
        const PrefixCountTable table(sys, prefix_, max_n);
        for (std::size_t n = prefix_.size(); n <= max_n; ++n) counts_[n] = table[n];
    }

    BigInt base_total = 0;
    const std::size_t last_base = std::min(base_limit_, max_n + 1);
    for (std::size_t n = prefix_.size(); n < last_base; ++n) base_total += counts_[n];
    if (base_total <= kMaxMaterializedBase) {
        base_.resize(last_base);
        for (std::size_t n = prefix_.size(); n < last_base; ++n) {
            std::vector<Symbol> w(prefix_.symbols().begin(), prefix_.symbols().end());
            collect_lex(w, n, sys_, base_[n]);
        }
    }
}

const BigInt& IrrRanker::count(std::size_t n) const
{
    if (n >= counts_.size()) throw DomainError("length beyond ranker table");
    return counts_[n];
}

Word IrrRanker::lex_unrank(std::size_t n, BigInt j) const
{
    if (!base_.empty()) return base_[n][static_cast<std::size_t>(j - 1)];
    std::vector<Symbol> w(prefix_.symbols().begin(), prefix_.symbols().end());
    while (w.size() < n) {
        bool placed = false;
        for (int a = 0; a < sys_.q() && !placed; ++a) {
            w.push_back(static_cast<Symbol>(a));
            if (!detail::ends_with_square(w, sys_.k())) {
                const BigInt cnt = count_extensions_direct(w, n - w.size(), sys_);
                if (j <= cnt) {
                    placed = true;
                    continue;
                }
                j -= cnt;
            }
            w.pop_back();
        }
        if (!placed) throw std::logic_error("lexicographic unrank ran past the set");
    }
    return Word(std::move(w), sys_.q());
}

BigInt IrrRanker::lex_rank(const Word& x) const
{
    if (!base_.empty()) {
        const auto& list = base_[x.size()];
        const auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) throw DomainError("word not in ranked set");
        return BigInt(it - list.begin() + 1);
    }
    BigInt j = 1;
    std::vector<Symbol> w(prefix_.symbols().begin(), prefix_.symbols().end());
    for (std::size_t pos = w.size(); pos < x.size(); ++pos) {
        for (int a = 0; a < x[pos]; ++a) {
            w.push_back(static_cast<Symbol>(a));
            if (!detail::ends_with_square(w, sys_.k()))
                j += count_extensions_direct(w, x.size() - w.size(), sys_);
            w.pop_back();
        }
        w.push_back(x[pos]);
    }
    return j;
}

Word IrrRanker::apply(const Word& x, int index, int branch) const
{
    if (sys_.k() == 2) return branch == 1 ? phi(x, index) : psi(x, index);
    switch (branch) {
    case 1: return phi1(x, index);
    case 2: return phi2(x, index);
    default: return phi3(x, index);
    }
}

Preimage IrrRanker::invert(const Word& y) const
{
    if (sys_.k() == 2) {
        if (y.back(1) != y.back(3)) {
            auto [x, i] = phi_inverse(y);
            return {std::move(x), i, 1};
        }
        auto [x, i] = psi_inverse(y);
        return {std::move(x), i, 2};
    }
    return phi123_inverse(y);
}

Word IrrRanker::unrank(std::size_t n, const BigInt& j, OpCounter* ops) const
{
    if (n < prefix_.size() || n > max_length()) throw DomainError("length outside ranker range");
    if (j < 1 || j > counts_[n])
        throw DomainError("rank " + to_string(j) + " outside [1, " + to_string(counts_[n]) + "]");

    struct Step {
        int branch;
        int index;
    };
    std::vector<Step> steps;
    BigInt offset = j - 1;
    std::size_t ops_done = 1;
    while (n >= base_limit_) {
        bool found = false;
        for (std::size_t b = 1; b <= coeffs_.size(); ++b) {
            const int mult = coeffs_[b - 1];
            if (mult == 0) continue;
            const BigInt block = mult * counts_[n - b];
            ops_done += 2;
            if (offset < block) {
                BigInt quotient, remainder;
                boost::multiprecision::divide_qr(offset, BigInt(mult), quotient, remainder);
                ++ops_done;
                steps.push_back({static_cast<int>(b), remainder.convert_to<int>() + 1});
                offset = std::move(quotient);
                n -= b;
                found = true;
                break;
            }
            offset -= block;
            ++ops_done;
        }
        if (!found) throw std::logic_error("unrank offset escaped every block");
    }
    if (ops) ops->bigint_ops += ops_done;

    Word x = lex_unrank(n, offset + 1);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) x = apply(x, it->index, it->branch);
    return x;
}

BigInt IrrRanker::rank(const Word& x, OpCounter* ops) const
{
    if (x.alphabet() != sys_.q()) throw DomainError("alphabet mismatch");
    if (x.size() > max_length()) throw DomainError("word longer than ranker range");
    if (x.size() < prefix_.size() || x.prefix(prefix_.size()) != prefix_)
        throw DomainError("word does not carry the ranker prefix");
    require_irreducible(x, sys_.k());

    struct Step {
        int branch;
        int index;
        std::size_t length;  // length of the image
    };
    std::vector<Step> steps;
    Word cur = x;
    while (cur.size() >= base_limit_) {
        const std::size_t len = cur.size();
        Preimage pre = invert(cur);
        steps.push_back({pre.branch, pre.index, len});
        cur = std::move(pre.word);
    }

    BigInt j = lex_rank(cur);
    std::size_t ops_done = 0;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const int mult = coeffs_[it->branch - 1];
        BigInt offset = 0;
        for (int b = 1; b < it->branch; ++b) {
            offset += coeffs_[b - 1] * counts_[it->length - b];
            ops_done += 2;
        }
        j = (j - 1) * mult + it->index + offset;
        ops_done += 3;
    }
    if (ops) ops->bigint_ops += ops_done;
    return j;
}

Word unrank_irr(std::size_t n, const BigInt& j, const DupSystem& sys)
{
    return IrrRanker(sys, n).unrank(n, j);
}

BigInt rank_irr(const Word& x, const DupSystem& sys) { return IrrRanker(sys, x.size()).rank(x); }

Word unrank_irr_prefix(const Word& p, std::size_t n, const BigInt& j, const DupSystem& sys)
{
    return IrrRanker(sys, p, n).unrank(n, j);
}

BigInt rank_irr_prefix(const Word& p, const Word& x, const DupSystem& sys)
{
    return IrrRanker(sys, p, x.size()).rank(x);
}

}  // namespace tandem
