#pragma once

// Shared helpers for the test suites: random graph generation plus small
// brute-force oracles that are deliberately independent of the library
// algorithms they are used to check. The oracles only query the Graph
// adjacency interface.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <suspath/graph.hpp>
#include <suspath/paths.hpp>

namespace testsupport {

inline suspath::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    suspath::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline suspath::Graph permuted(const suspath::Graph& g, const std::vector<int>& perm) {
    suspath::Graph h(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        g.for_each_neighbor(v, [&](int w) {
            if (w > v) h.add_edge(perm[v], perm[w]);
        });
    return h;
}

inline suspath::Graph random_permutation_of(std::mt19937_64& rng, const suspath::Graph& g) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permuted(g, perm);
}

// Longest simple path by plain depth-first enumeration of every simple path.
inline int longest_path_brute(const suspath::Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> used(n, 0);
    int best = n > 0 ? 1 : 0;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int v) -> void {
        used[v] = 1;
        stack.push_back(v);
        best = std::max(best, static_cast<int>(stack.size()));
        for (int w = 0; w < n; ++w)
            if (!used[w] && g.has_edge(v, w)) self(self, w);
        stack.pop_back();
        used[v] = 0;
    };
    for (int s = 0; s < n; ++s) dfs(dfs, s);
    return best;
}

// Subgraph (not necessarily induced) containment by backtracking over
// injective vertex maps: every edge of the pattern must land on an edge.
inline bool contains_subgraph_brute(const suspath::Graph& host, const suspath::Graph& pattern) {
    const int nh = host.vertex_count();
    const int np = pattern.vertex_count();
    if (np > nh) return false;
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> image(np, -1);
    std::vector<char> used(nh, 0);
    auto dfs = [&](auto&& self, int idx) -> bool {
        if (idx == np) return true;
        const int pv = order[idx];
        for (int hv = 0; hv < nh; ++hv) {
            if (used[hv]) continue;
            bool ok = true;
            for (int prev = 0; prev < idx && ok; ++prev) {
                if (pattern.has_edge(pv, order[prev]) && !host.has_edge(hv, image[order[prev]]))
                    ok = false;
            }
            if (!ok) continue;
            used[hv] = 1;
            image[pv] = hv;
            if (self(self, idx + 1)) return true;
            used[hv] = 0;
            image[pv] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

inline bool suspension_pk_free_brute(const suspath::Graph& g, int k) {
    return !contains_subgraph_brute(g, suspath::suspension(suspath::path_graph(k)));
}

inline std::int64_t count_triangles_brute(const suspath::Graph& g) {
    const int n = g.vertex_count();
    std::int64_t total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ++total;
    return total;
}

// Isomorphism by trying every permutation; intended for n <= 8.
inline bool are_isomorphic_brute(const suspath::Graph& a, const suspath::Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace testsupport
