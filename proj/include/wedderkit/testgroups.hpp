#pragma once

#include <algorithm>
#include <array>

#include "wedderkit/group.hpp"

// Permutation-built tables for groups outside the DSL; test-only helpers.
namespace wedderkit::testgroups {

inline FiniteGroup from_permutations(std::vector<std::vector<int>> perms) {
    size_t deg = perms[0].size();
    std::vector<int> identity(deg);
    for (size_t i = 0; i < deg; ++i) identity[i] = static_cast<int>(i);
    auto it = std::find(perms.begin(), perms.end(), identity);
    if (it != perms.begin()) std::iter_swap(perms.begin(), it);
    auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> r(deg);
        for (size_t i = 0; i < deg; ++i) r[i] = f[g[i]];
        return r;
    };
    int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto prod = compose(perms[i], perms[j]);
            table[i][j] =
                static_cast<int>(std::find(perms.begin(), perms.end(), prod) - perms.begin());
        }
    return FiniteGroup::from_table(table);
}

inline FiniteGroup symmetric(int deg, bool even_only) {
    std::vector<int> p(deg);
    for (int i = 0; i < deg; ++i) p[i] = i;
    std::vector<std::vector<int>> perms;
    do {
        int inv = 0;
        for (int i = 0; i < deg; ++i)
            for (int j = i + 1; j < deg; ++j)
                if (p[i] > p[j]) ++inv;
        if (!even_only || inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return from_permutations(std::move(perms));
}

inline FiniteGroup alternating4() { return symmetric(4, true); }
inline FiniteGroup symmetric4() { return symmetric(4, false); }

} // namespace wedderkit::testgroups
