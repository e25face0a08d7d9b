#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "tandem/word.hpp"

// Brute-force references. Nothing here consults the counting or ranking
// code; irreducibility is re-checked with a naive scan.
namespace tandem::oracle {

struct OracleBudget {
    std::size_t max_words = 1u << 22;  ///< words enumerated or states visited
    std::size_t max_depth = 16;        ///< duplication depth for descendant searches
};

/// Naive double loop: true iff no i, t <= k with x[i, i+t) == x[i+t, i+2t).
bool naive_irreducible(const Word& x, std::size_t k);

/// All of Irr_{<=k}(n, q) in lexicographic order, by filtering Sigma_q^n.
std::vector<Word> enumerate_irr_bruteforce(std::size_t n, const DupSystem& sys,
                                           const OracleBudget& budget = {});

/// Every irreducible word reachable from y by deduplications of length <= k,
/// exploring all deduplication orders.
std::set<Word> all_roots_bfs(const Word& y, const DupSystem& sys, const OracleBudget& budget = {});

/// All words reachable from x by at most `depth` duplications (x included).
std::set<Word> descendants_within(const Word& x, std::size_t depth, const DupSystem& sys,
                                  const OracleBudget& budget = {});

/// Out-degrees of every state of the length-m state graph, by testing every
/// pair (x, x') for irreducibility of x x'.
std::vector<std::size_t> outdegrees_bruteforce(std::size_t m, const DupSystem& sys,
                                               const OracleBudget& budget = {});

std::size_t min_outdegree_bruteforce(std::size_t m, const DupSystem& sys,
                                     const OracleBudget& budget = {});

}  // namespace tandem::oracle
