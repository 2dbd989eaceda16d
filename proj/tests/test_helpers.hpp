#pragma once

// Shared test-only utilities. The verification paths here are deliberately
// independent of the library internals (adjacency-list loops instead of
// bitsets, principal minors instead of elimination) so the two sides can
// cross-check each other.

#include <random>
#include <vector>

#include "srg/graph.hpp"
#include "srg/rational.hpp"

namespace srg::testing {

// O(v^3) strong-regularity check from adjacency lists; no bitsets involved.
inline bool brute_force_srg(const Graph& g, const SrgParams& p) {
    const int v = g.v();
    if (int64_t(v) != p.v) return false;
    std::vector<std::vector<int>> adj(v);
    for (int i = 0; i < v; i++)
        for (int j = 0; j < v; j++)
            if (i != j && g.adjacent(i, j)) adj[i].push_back(j);
    for (int i = 0; i < v; i++)
        if (int64_t(adj[i].size()) != p.k) return false;
    for (int i = 0; i < v; i++)
        for (int j = i + 1; j < v; j++) {
            int common = 0;
            for (int x : adj[i])
                for (int y : adj[j])
                    if (x == y) common++;
            int64_t want = g.adjacent(i, j) ? p.lambda : p.mu;
            if (common != want) return false;
        }
    return true;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; i++) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

inline Rat random_small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
    return rat(num(rng), den(rng));
}

inline RatMatrix random_rat_matrix(std::mt19937_64& rng, int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) m.at(i, j) = random_small_rat(rng);
    return m;
}

// PSD oracle: a symmetric matrix is PSD iff every principal minor is >= 0.
inline bool psd_by_principal_minors(const RatMatrix& m) {
    const int n = m.rows();
    for (int mask = 1; mask < (1 << n); mask++) {
        std::vector<int> idx;
        for (int i = 0; i < n; i++)
            if (mask & (1 << i)) idx.push_back(i);
        RatMatrix sub(int(idx.size()), int(idx.size()));
        for (size_t i = 0; i < idx.size(); i++)
            for (size_t j = 0; j < idx.size(); j++) sub.at(int(i), int(j)) = m.at(idx[i], idx[j]);
        if (rat_det(sub) < 0) return false;
    }
    return true;
}

} // namespace srg::testing
