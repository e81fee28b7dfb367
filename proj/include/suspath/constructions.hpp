#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace suspath {

/// The three extremal families. Vertex layout is deterministic: part A
/// occupies the low indices, part B the rest, and matchings, blocks and
/// cliques are laid out in consecutive index runs, so graph6 output is
/// stable across runs.
enum class ConstructionKind { hn, fnk, hnk };

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::hn;
    int n = 0;
    int k = 0;  // unused for hn
};

namespace detail {

inline void require_multiple(int n, int modulus) {
    if (modulus <= 0 || n <= 0 || n % modulus != 0)
        throw std::invalid_argument("n must be a multiple of " + std::to_string(modulus));
}

inline void require_k_at_least_4(int k) {
    if (k < 4) throw std::invalid_argument("k must be at least 4");
}

}  // namespace detail

/// Almost balanced complete bipartite graph plus a perfect matching inside
/// one part. Part sizes and the matched side depend on n mod 4:
///   4m:   K_{2m,2m},    matching on the first part
///   4m+1: K_{2m,2m+1},  matching on the first (smaller) part
///   4m+2: K_{2m,2m+2},  matching on the first (smaller) part
///   4m+3: K_{2m+1,2m+2}, matching on the second (larger, even) part
inline Graph build_hn(int n) {
    if (n < 4) throw std::invalid_argument("n must be at least 4");
    const int m = n / 4;
    int a = 0;
    bool match_first = true;
    switch (n % 4) {
        case 0: a = 2 * m; match_first = true; break;
        case 1: a = 2 * m; match_first = true; break;
        case 2: a = 2 * m; match_first = true; break;
        default: a = 2 * m + 1; match_first = false; break;
    }
    Graph g = complete_bipartite(a, n - a);
    const int base = match_first ? 0 : a;
    const int size = match_first ? a : n - a;
    for (int t = 0; t + 1 < size; t += 2) g.add_edge(base + t, base + t + 1);
    return g;
}

inline std::int64_t triangles_hn_formula(int n) {
    if (n < 4) throw std::invalid_argument("n must be at least 4");
    return static_cast<std::int64_t>(n) * n / 8;
}

/// K_{n/2,n/2} with part A carrying disjoint balanced complete bipartite
/// blocks on 2*floor((k-2)/2) vertices each. Requires n to be a multiple of
/// 4*floor((k-2)/2).
inline Graph build_fnk(int n, int k) {
    detail::require_k_at_least_4(k);
    const int q = (k - 2) / 2;
    detail::require_multiple(n, 4 * q);
    const int half = n / 2;
    Graph g = complete_bipartite(half, half);
    const int blocks = n / (4 * q);
    for (int b = 0; b < blocks; ++b) {
        const int base = b * 2 * q;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) g.add_edge(base + i, base + q + j);
    }
    return g;
}

inline std::int64_t triangles_fnk_formula(int n, int k) {
    detail::require_k_at_least_4(k);
    const int q = (k - 2) / 2;
    detail::require_multiple(n, 4 * q);
    return static_cast<std::int64_t>(q) * (n / 4) * (n / 2);
}

/// K_{n/2,n/2} with part A carrying disjoint cliques on floor(k/2) vertices
/// each. Requires n to be a multiple of 2*floor(k/2).
inline Graph build_hnk(int n, int k) {
    detail::require_k_at_least_4(k);
    const int q = k / 2;
    detail::require_multiple(n, 2 * q);
    const int half = n / 2;
    Graph g = complete_bipartite(half, half);
    const int cliques = n / (2 * q);
    for (int c = 0; c < cliques; ++c) {
        const int base = c * q;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) g.add_edge(base + i, base + j);
    }
    return g;
}

/// Triangle count of build_hnk: every triangle is either an edge inside A
/// plus a vertex of B, or lies wholly inside one clique of A.
inline std::int64_t triangles_hnk_formula(int n, int k) {
    detail::require_k_at_least_4(k);
    const int q = k / 2;
    detail::require_multiple(n, 2 * q);
    const std::int64_t cliques = n / (2 * q);
    const std::int64_t edges_in_a = cliques * q * (q - 1) / 2;
    const std::int64_t per_clique = static_cast<std::int64_t>(q) * (q - 1) * (q - 2) / 6;
    return static_cast<std::int64_t>(n / 2) * edges_in_a + cliques * per_clique;
}

inline Graph build_construction(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::hn: return build_hn(spec.n);
        case ConstructionKind::fnk: return build_fnk(spec.n, spec.k);
        case ConstructionKind::hnk: return build_hnk(spec.n, spec.k);
    }
    throw std::invalid_argument("unknown construction kind");
}

inline std::int64_t construction_triangle_formula(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::hn: return triangles_hn_formula(spec.n);
        case ConstructionKind::fnk: return triangles_fnk_formula(spec.n, spec.k);
        case ConstructionKind::hnk: return triangles_hnk_formula(spec.n, spec.k);
    }
    throw std::invalid_argument("unknown construction kind");
}

}  // namespace suspath
