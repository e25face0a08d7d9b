#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

#include "tandem/word.hpp"

namespace tandem::detail {

// Does w end with a square uu, |u| <= k?
inline bool ends_with_square(std::span<const Symbol> w, std::size_t k)
{
    const std::size_t n = w.size();
    for (std::size_t t = 1; t <= k && 2 * t <= n; ++t) {
        if (std::equal(w.end() - 2 * t, w.end() - t, w.end() - t)) return true;
    }
    return false;
}

}  // namespace tandem::detail
