#pragma once

#include <vector>

namespace peerline {

// Lexicographic k-subsets of {0..n-1}; advance returns false after the last one.
struct Combination {
    int n, k;
    std::vector<int> idx;

    Combination(int n_, int k_) : n(n_), k(k_), idx(static_cast<size_t>(k_))
    {
        for (int i = 0; i < k; ++i)
            idx[static_cast<size_t>(i)] = i;
    }

    bool advance()
    {
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        return true;
    }
};

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace peerline
