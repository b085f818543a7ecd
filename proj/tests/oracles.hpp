#pragma once

// Brute-force reference implementations used only by tests. They avoid the
// library's descendant bitmasks and derived formulas on purpose: ancestry is
// decided by walking parent chains, counts by filtering all n! assignments.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// u strictly below v, by walking up from u.
inline bool below(const std::vector<int>& parents, int u, int v) {
    for (int x = parents[u - 1]; x != 0; x = parents[x - 1])
        if (x == v) return true;
    return false;
}

inline std::vector<int> below_set(const std::vector<int>& parents, int v) {
    std::vector<int> out;
    for (int u = 1; u <= static_cast<int>(parents.size()); ++u)
        if (below(parents, u, v)) out.push_back(u);
    return out;
}

inline int subtree_size(const std::vector<int>& parents, int v) {
    return static_cast<int>(below_set(parents, v).size()) + 1;
}

// All order-preserving positive labelings, found by filtering all n!
// assignments of {1..n} to vertices.
inline std::vector<std::vector<int>> natural_labelings(const std::vector<int>& parents) {
    const int n = static_cast<int>(parents.size());
    std::vector<int> vals(n);
    std::iota(vals.begin(), vals.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v)
            for (int u = 1; u <= n && ok; ++u)
                if (below(parents, u, v) && vals[u - 1] > vals[v - 1]) ok = false;
        if (ok) out.push_back(vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

inline int forest_inv(const std::vector<int>& parents, const std::vector<int>& vals) {
    const int n = static_cast<int>(parents.size());
    int c = 0;
    for (int v = 1; v <= n; ++v)
        for (int u = 1; u <= n; ++u)
            if (below(parents, u, v) && vals[u - 1] > vals[v - 1]) ++c;
    return c;
}

inline int forest_ntwo(const std::vector<int>& parents, const std::vector<int>& vals) {
    const int n = static_cast<int>(parents.size());
    int c = 0;
    for (int v = 1; v <= n; ++v)
        for (int u = 1; u <= n; ++u)
            if (below(parents, u, v) && vals[u - 1] + vals[v - 1] < 0) ++c;
    return c;
}

// Word statistics on a window word.
inline int word_inv(const std::vector<int>& word) {
    int c = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j) c += word[i] > word[j];
    return c;
}

inline int word_ntwo(const std::vector<int>& word) {
    int c = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j) c += word[i] + word[j] < 0;
    return c;
}

inline int word_neg(const std::vector<int>& word) {
    int c = 0;
    for (int x : word) c += x < 0;
    return c;
}

// Right-to-left scan oracles; values, sorted ascending.
inline std::vector<int> rlmin_a(const std::vector<int>& word) {
    std::vector<int> out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        bool ok = true;
        for (std::size_t j = i + 1; j < word.size(); ++j) ok = ok && word[i] < word[j];
        if (ok) out.push_back(word[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> rlmin_b(const std::vector<int>& word, int floor_value) {
    std::vector<int> out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] <= floor_value) continue;
        bool ok = true;
        for (std::size_t j = i + 1; j < word.size(); ++j)
            ok = ok && word[i] < std::abs(word[j]);
        if (ok) out.push_back(word[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
