#include "tandem/oracle.hpp"

#include <algorithm>
#include <deque>

#include "tandem/errors.hpp"

namespace tandem::oracle {

bool naive_irreducible(const Word& x, std::size_t k)
{
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 1; t <= k && i + 2 * t <= n; ++t) {
            bool square = true;
            for (std::size_t r = 0; r < t; ++r) {
                if (x[i + r] != x[i + t + r]) {
                    square = false;
                    break;
                }
            }
            if (square) return false;
        }
    }
    return true;
}

std::vector<Word> enumerate_irr_bruteforce(std::size_t n, const DupSystem& sys,
                                           const OracleBudget& budget)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<std::size_t>(sys.q());
        if (total > budget.max_words) throw BudgetExceeded("q^n exceeds the oracle budget");
    }
    std::vector<Word> out;
    std::vector<Symbol> digits(n, 0);
    for (std::size_t count = 0; count < total; ++count) {
        Word w(digits, sys.q());
        if (naive_irreducible(w, sys.k())) out.push_back(std::move(w));
        // odometer, last digit fastest, so output is lexicographic
        for (std::size_t pos = n; pos-- > 0;) {
            if (++digits[pos] < sys.q()) break;
            digits[pos] = 0;
        }
    }
    return out;
}

std::set<Word> all_roots_bfs(const Word& y, const DupSystem& sys, const OracleBudget& budget)
{
    const auto k = static_cast<std::size_t>(sys.k());
    std::set<Word> seen{y};
    std::deque<Word> frontier{y};
    std::set<Word> roots;
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop_front();
        bool reducible = false;
        const std::size_t n = w.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 1; t <= k && i + 2 * t <= n; ++t) {
                if (w.substr(i, t) != w.substr(i + t, t)) continue;
                reducible = true;
                Word parent = concat(w.prefix(i + t), w.suffix(n - i - 2 * t));
                if (seen.insert(parent).second) {
                    if (seen.size() > budget.max_words) throw BudgetExceeded("root search budget");
                    frontier.push_back(std::move(parent));
                }
            }
        }
        if (!reducible) roots.insert(std::move(w));
    }
    return roots;
}

std::set<Word> descendants_within(const Word& x, std::size_t depth, const DupSystem& sys,
                                  const OracleBudget& budget)
{
    if (depth > budget.max_depth) throw BudgetExceeded("descendant depth exceeds budget");
    std::set<Word> all{x};
    std::vector<Word> level{x};
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (std::size_t t = 1; t <= static_cast<std::size_t>(sys.k()); ++t) {
                for (std::size_t i = 0; i + t <= w.size(); ++i) {
                    Word child = concat(w.prefix(i + t), w.suffix(w.size() - i));
                    if (all.insert(child).second) {
                        if (all.size() > budget.max_words) throw BudgetExceeded("descendant budget");
                        next.push_back(std::move(child));
                    }
                }
            }
        }
        level = std::move(next);
    }
    return all;
}

std::vector<std::size_t> outdegrees_bruteforce(std::size_t m, const DupSystem& sys,
                                               const OracleBudget& budget)
{
    const auto states = enumerate_irr_bruteforce(m, sys, budget);
    if (states.size() * states.size() > budget.max_words * 16)
        throw BudgetExceeded("state pairs exceed the oracle budget");
    std::vector<std::size_t> degrees;
    degrees.reserve(states.size());
    for (const Word& x : states) {
        std::size_t deg = 0;
        for (const Word& x2 : states) {
            if (naive_irreducible(concat(x, x2), sys.k())) ++deg;
        }
        degrees.push_back(deg);
    }
    return degrees;
}

std::size_t min_outdegree_bruteforce(std::size_t m, const DupSystem& sys, const OracleBudget& budget)
{
    const auto degrees = outdegrees_bruteforce(m, sys, budget);
    if (degrees.empty()) throw DomainError("no states");
    return *std::min_element(degrees.begin(), degrees.end());
}

}  // namespace tandem::oracle
