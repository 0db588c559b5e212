#pragma once

#include <cstdint>
#include <vector>

#include "lusin/error.hpp"

namespace lusin {

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

/// All strictly increasing index tuples of length m from {0,...,n-1},
/// lexicographic. The basis order for exterior powers.
inline std::vector<std::vector<int>> increasing_tuples(int n, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n) return out;
    std::vector<int> t(m);
    for (int i = 0; i < m; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        if (m == 0) break;
        int i = m - 1;
        while (i >= 0 && t[i] == n - m + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < m; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

/// Lexicographic rank of a strictly increasing tuple among all C(n,m).
inline int increasing_tuple_rank(const std::vector<int>& t, int n) {
    const int m = static_cast<int>(t.size());
    std::int64_t rank = 0;
    int prev = -1;
    for (int i = 0; i < m; ++i) {
        for (int v = prev + 1; v < t[i]; ++v) rank += binomial(n - 1 - v, m - 1 - i);
        prev = t[i];
    }
    return static_cast<int>(rank);
}

/// All nondecreasing index tuples of length k from {0,...,n-1},
/// lexicographic. The basis order for symmetric powers; tuple (i1<=...<=ik)
/// corresponds to the multi-index counting occurrences of each axis.
inline std::vector<std::vector<int>> nondecreasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    std::vector<int> t(k, 0);
    while (true) {
        out.push_back(t);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && t[i] == n - 1) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[i];
    }
    return out;
}

/// Multi-index (occurrence counts per axis) of a nondecreasing tuple.
inline std::vector<int> tuple_to_multiindex(const std::vector<int>& t, int n) {
    std::vector<int> alpha(n, 0);
    for (int v : t) {
        if (v < 0 || v >= n) throw InvalidDimension("tuple entry outside axis range");
        ++alpha[v];
    }
    return alpha;
}

inline std::vector<int> multiindex_to_tuple(const std::vector<int>& alpha) {
    std::vector<int> t;
    for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
        for (int c = 0; c < alpha[i]; ++c) t.push_back(i);
    return t;
}

inline int multiindex_modulus(const std::vector<int>& alpha) {
    int s = 0;
    for (int a : alpha) {
        if (a < 0) throw InvalidDimension("negative multi-index entry");
        s += a;
    }
    return s;
}

} // namespace lusin
