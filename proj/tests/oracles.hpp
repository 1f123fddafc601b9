#pragma once

// Brute-force reference implementations used only by tests. None of these share
// code paths with the library beyond the Digraph adjacency accessors.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "lpq/graph.hpp"

namespace lpq::oracle {

/// Required gap per vertex pair (0 = unconstrained), from an adjacency matrix and
/// an explicit search over all middle vertices.
inline std::vector<std::vector<int>> gap_matrix(const Digraph& g, int p, int q) {
    const std::size_t n = g.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.out(u)) adj[u][v] = true;

    std::vector<std::vector<int>> gap(n, std::vector<int>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t w = 0; w < n; ++w) {
            if (u == w) continue;
            bool edge = adj[u][w] || adj[w][u];
            bool two = false;
            for (std::size_t x = 0; x < n && !two; ++x) two = (adj[u][x] && adj[x][w]) || (adj[w][x] && adj[x][u]);
            int need = 0;
            if (edge) need = std::max(need, p);
            if (two) need = std::max(need, q);
            if (edge && two) need = std::max(p, q);
            gap[u][w] = need;
        }
    }
    return gap;
}

inline bool naive_valid(const std::vector<std::vector<int>>& gap, const std::vector<int>& f) {
    for (std::size_t u = 0; u < f.size(); ++u)
        for (std::size_t w = u + 1; w < f.size(); ++w)
            if (std::abs(f[u] - f[w]) < gap[u][w]) return false;
    return true;
}

/// Counts valid labelings by filtering all (k+1)^|V| assignments.
inline std::uint64_t naive_count(const Digraph& g, int k, int p = 2, int q = 1) {
    const auto gap = gap_matrix(g, p, q);
    std::vector<int> f(g.size(), 0);
    std::uint64_t count = 0;
    while (true) {
        if (naive_valid(gap, f)) ++count;
        std::size_t pos = 0;
        while (pos < f.size() && f[pos] == k) f[pos++] = 0;
        if (pos == f.size()) return count;
        ++f[pos];
    }
}

/// Membership table for S(m, n) over 0..limit by dynamic programming.
inline std::vector<bool> semigroup_table(int m, int n, int limit) {
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    reach[0] = true;  // the empty sum, excluded below
    for (int t = 1; t <= limit; ++t)
        reach[t] = (t >= m && reach[t - m]) || (t >= n && reach[t - n]);
    reach[0] = false;
    return reach;
}

/// Lexicographically least sequence over {0..span} meeting the wrapped condition vector.
inline std::optional<std::vector<int>> least_pattern(int d, int span, const std::vector<int>& cv) {
    std::vector<int> g(static_cast<std::size_t>(d), 0);
    auto ok = [&] {
        for (int s = 0; s < d; ++s)
            for (int t = 1; t <= static_cast<int>(cv.size()); ++t)
                if (std::abs(g[s] - g[(s + t) % d]) < cv[t - 1]) return false;
        return true;
    };
    while (true) {
        if (ok()) return g;
        int pos = d - 1;
        while (pos >= 0 && g[pos] == span) g[pos--] = 0;
        if (pos < 0) return std::nullopt;
        ++g[pos];
    }
}

}  // namespace lpq::oracle
