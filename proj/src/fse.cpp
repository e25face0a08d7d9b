#include "tandem/fse.hpp"

#include <algorithm>

#include "squares.hpp"
#include "tandem/errors.hpp"

namespace tandem {

namespace {

std::size_t window_length(const DupSystem& sys) { return 2 * static_cast<std::size_t>(sys.k()) - 1; }

void neighbor_dfs(std::vector<Symbol>& w, std::size_t stop, const DupSystem& sys,
                  std::size_t window, std::vector<Word>& out)
{
    if (w.size() == stop) {
        out.emplace_back(std::vector<Symbol>(w.begin() + window, w.end()), sys.q());
        return;
    }
    for (int a = 0; a < sys.q(); ++a) {
        w.push_back(static_cast<Symbol>(a));
        if (!detail::ends_with_square(w, sys.k())) neighbor_dfs(w, stop, sys, window, out);
        w.pop_back();
    }
}

std::vector<Word> list_neighbors(const Word& x, const FseParams& p)
{
    const std::size_t window = window_length(p.sys);
    std::vector<Symbol> w(x.symbols().end() - window, x.symbols().end());
    std::vector<Word> out;
    neighbor_dfs(w, window + p.m, p.sys, window, out);
    return out;
}

Word least_irreducible(std::size_t m, const DupSystem& sys)
{
    std::vector<Symbol> w;
    while (w.size() < m) {
        for (int a = 0; a < sys.q(); ++a) {
            w.push_back(static_cast<Symbol>(a));
            if (!detail::ends_with_square(w, sys.k())) break;
            w.pop_back();
        }
    }
    return Word(std::move(w), sys.q());
}

void collect_states(std::vector<Symbol>& w, std::size_t m, const DupSystem& sys,
                    std::vector<Word>& out)
{
    if (w.size() == m) {
        out.emplace_back(w, sys.q());
        return;
    }
    for (int a = 0; a < sys.q(); ++a) {
        w.push_back(static_cast<Symbol>(a));
        if (!detail::ends_with_square(w, sys.k())) collect_states(w, m, sys, out);
        w.pop_back();
    }
}

}  // namespace

BigInt block_value(const Word& block)
{
    BigInt v = 0;
    for (Symbol s : block.symbols()) v = v * block.alphabet() + s;
    return v;
}

Word block_from_value(BigInt value, std::size_t length, int q)
{
    std::vector<Symbol> digits(length, 0);
    for (std::size_t i = length; i-- > 0;) {
        digits[i] = static_cast<Symbol>(static_cast<unsigned>(value % q));
        value /= q;
    }
    if (value != 0) throw DomainError("value does not fit in the block length");
    return Word(std::move(digits), q);
}

EdgeLabelTable build_lookup_table(const FseParams& params, std::size_t state_limit)
{
    if (count_irr(params.m, params.sys) > state_limit)
        throw CapacityError("state space I(" + std::to_string(params.m) + ", " +
                            std::to_string(params.sys.q()) +
                            ") exceeds the lookup-table limit; use the rank-based backend");
    EdgeLabelTable table{params, pow_bigint(params.sys.q(), static_cast<unsigned>(params.ell)), {}};
    std::vector<Word> states;
    std::vector<Symbol> w;
    collect_states(w, params.m, params.sys, states);
    for (const Word& s : states) table.rows.emplace(s, list_neighbors(s, params));
    return table;
}

FseCodec::FseCodec(FseParams params, Backend backend, std::size_t state_limit)
    : params_(params),
      backend_(backend),
      labels_(pow_bigint(params.sys.q(), static_cast<unsigned>(params.ell))),
      start_(least_irreducible(params.m, params.sys)),
      counter_(params.sys, params.m),
      table_{params, labels_, {}}
{
    if (params.m < window_length(params.sys))
        throw DomainError("state length m must be at least 2k-1");
    if (labels_ > delta_min_degree(params.m, params.sys))
        throw DomainError("q^ell exceeds the minimum out-degree Delta(m)");
    if (backend_ == Backend::lookup_table) table_ = build_lookup_table(params, state_limit);
}

void FseCodec::check_state(const Word& x) const
{
    if (x.alphabet() != params_.sys.q() || x.size() != params_.m ||
        !is_irreducible(x, params_.sys.k()))
        throw DomainError("not a state: " + x.str());
}

BigInt FseCodec::completions(std::vector<Symbol>& window, std::size_t remaining) const
{
    return counter_.count(window, remaining);
}

std::vector<Word> FseCodec::neighbors(const Word& x) const
{
    check_state(x);
    if (backend_ == Backend::lookup_table) return table_.rows.at(x);
    return list_neighbors(x, params_);
}

Word FseCodec::nth_neighbor(const Word& x, const BigInt& j) const
{
    check_state(x);
    if (j < 1) throw DomainError("neighbor rank must be positive");
    if (backend_ == Backend::lookup_table) {
        const auto& row = table_.rows.at(x);
        if (j > row.size()) throw DomainError("neighbor rank exceeds out-degree");
        return row[static_cast<std::size_t>(j - 1)];
    }

    const std::size_t window = window_length(params_.sys);
    const std::size_t k = params_.sys.k();
    std::vector<Symbol> w(x.symbols().end() - window, x.symbols().end());
    BigInt remaining_rank = j;
    for (std::size_t pos = 0; pos < params_.m; ++pos) {
        bool placed = false;
        for (int a = 0; a < params_.sys.q(); ++a) {
            w.push_back(static_cast<Symbol>(a));
            if (!detail::ends_with_square(w, k)) {
                BigInt c = completions(w, params_.m - pos - 1);
                if (remaining_rank <= c) {
                    placed = true;
                    break;
                }
                remaining_rank -= c;
            }
            w.pop_back();
        }
        if (!placed) throw DomainError("neighbor rank exceeds out-degree");
    }
    return Word(std::vector<Symbol>(w.begin() + window, w.end()), params_.sys.q());
}

BigInt FseCodec::neighbor_index(const Word& x, const Word& next) const
{
    check_state(x);
    if (next.alphabet() != params_.sys.q() || next.size() != params_.m)
        throw CorruptInputError("block has wrong length or alphabet: " + next.str());

    BigInt idx;
    if (backend_ == Backend::lookup_table) {
        const auto& row = table_.rows.at(x);
        const auto it = std::lower_bound(row.begin(), row.end(), next);
        if (it == row.end() || *it != next)
            throw CorruptInputError(next.str() + " is not a neighbor of " + x.str());
        idx = BigInt(it - row.begin() + 1);
    } else {
        const std::size_t window = window_length(params_.sys);
        const std::size_t k = params_.sys.k();
        std::vector<Symbol> w(x.symbols().end() - window, x.symbols().end());
        idx = 1;
        for (std::size_t pos = 0; pos < params_.m; ++pos) {
            for (int a = 0; a < next[pos]; ++a) {
                w.push_back(static_cast<Symbol>(a));
                if (!detail::ends_with_square(w, k)) idx += completions(w, params_.m - pos - 1);
                w.pop_back();
            }
            w.push_back(next[pos]);
            if (detail::ends_with_square(w, k))
                throw CorruptInputError(next.str() + " is not a neighbor of " + x.str());
        }
    }
    if (idx > labels_)
        throw UnlabeledEdgeError("edge " + x.str() + " -> " + next.str() + " has index " +
                                 to_string(idx) + " beyond the " + to_string(labels_) + " labels");
    return idx;
}

Word FseCodec::encode_stream(std::span<const Word> blocks) const
{
    Word out(params_.sys.q());
    Word state = start_;
    for (const Word& y : blocks) {
        if (y.size() != params_.ell || y.alphabet() != params_.sys.q())
            throw DomainError("message block must have " + std::to_string(params_.ell) + " symbols");
        state = nth_neighbor(state, block_value(y) + 1);
        out.append(state);
    }
    return out;
}

std::vector<Word> FseCodec::decode_stream(const Word& x) const
{
    if (x.alphabet() != params_.sys.q()) throw CorruptInputError("alphabet mismatch");
    if (x.size() % params_.m != 0)
        throw CorruptInputError("encoded length " + std::to_string(x.size()) +
                                " is not a multiple of m = " + std::to_string(params_.m));
    std::vector<Word> blocks;
    blocks.reserve(x.size() / params_.m);
    Word state = start_;
    for (std::size_t pos = 0; pos < x.size(); pos += params_.m) {
        Word next = x.substr(pos, params_.m);
        if (!is_irreducible(next, params_.sys.k()))
            throw CorruptInputError("block " + next.str() + " is not a state");
        const BigInt idx = neighbor_index(state, next);
        blocks.push_back(block_from_value(idx - 1, params_.ell, params_.sys.q()));
        state = std::move(next);
    }
    return blocks;
}

}  // namespace tandem
