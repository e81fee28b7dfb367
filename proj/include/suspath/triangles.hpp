#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace suspath {

/// Exact triangle count. Vertices are ranked by degree and edges oriented
/// from lower to higher rank, so each triangle is counted exactly once by a
/// popcount over the intersection of two successor rows.
inline std::int64_t count_triangles(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;

    const int words = (n + 63) / 64;
    std::vector<std::uint64_t> succ(static_cast<std::size_t>(n) * words, 0);
    for (int v = 0; v < n; ++v) {
        const int pv = pos[v];
        g.for_each_neighbor(v, [&](int u) {
            const int pu = pos[u];
            if (pu > pv)
                succ[static_cast<std::size_t>(pv) * words + (pu >> 6)] |= std::uint64_t{1} << (pu & 63);
        });
    }
    std::int64_t total = 0;
    for (int p = 0; p < n; ++p) {
        const std::uint64_t* rp = succ.data() + static_cast<std::size_t>(p) * words;
        for (int w = 0; w < words; ++w) {
            std::uint64_t word = rp[w];
            while (word != 0) {
                const int q = w * 64 + std::countr_zero(word);
                word &= word - 1;
                const std::uint64_t* rq = succ.data() + static_cast<std::size_t>(q) * words;
                for (int x = 0; x < words; ++x) total += std::popcount(rp[x] & rq[x]);
            }
        }
    }
    return total;
}

/// Triangles through v; equals the edge count of the induced neighborhood.
inline std::int64_t count_triangles_at(const Graph& g, int v) {
    const auto rv = g.row(v);
    const int words = g.words_per_row();
    std::int64_t twice = 0;
    g.for_each_neighbor(v, [&](int u) {
        const auto ru = g.row(u);
        for (int w = 0; w < words; ++w) twice += std::popcount(rv[w] & ru[w]);
    });
    return twice / 2;
}

/// A two-part split of the vertex set, stored as bitsets. The parts must be
/// disjoint and cover every vertex.
struct Bipartition {
    std::vector<std::uint64_t> part1, part2;

    static Bipartition from_part1(const Graph& g, const std::vector<int>& part1_vertices) {
        const int n = g.vertex_count();
        const int words = g.words_per_row();
        Bipartition b;
        b.part1.assign(static_cast<std::size_t>(words), 0);
        b.part2.assign(static_cast<std::size_t>(words), 0);
        for (const int v : part1_vertices) {
            if (v < 0 || v >= n) throw std::out_of_range("bipartition vertex out of range");
            b.part1[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
        for (int v = 0; v < n; ++v)
            if (!((b.part1[v >> 6] >> (v & 63)) & 1u)) b.part2[v >> 6] |= std::uint64_t{1} << (v & 63);
        return b;
    }

    bool contains1(int v) const { return (part1[v >> 6] >> (v & 63)) & 1u; }
};

/// Triangle counts by position relative to a bipartition: t1 has two vertices
/// in part 1, t2 has two in part 2, t3 lies wholly inside one part.
struct TriangleClassification {
    std::int64_t t1 = 0, t2 = 0, t3 = 0;
    std::int64_t total() const { return t1 + t2 + t3; }
    friend bool operator==(const TriangleClassification&, const TriangleClassification&) = default;
};

inline TriangleClassification classify_triangles(const Graph& g, const Bipartition& b) {
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    if (static_cast<int>(b.part1.size()) != words || static_cast<int>(b.part2.size()) != words)
        throw std::invalid_argument("bipartition does not match the graph");
    for (int w = 0; w < words; ++w) {
        if ((b.part1[w] & b.part2[w]) != 0)
            throw std::invalid_argument("bipartition parts overlap");
        std::uint64_t expected = ~std::uint64_t{0};
        const int base = w * 64;
        if (n - base < 64) expected = n > base ? (std::uint64_t{1} << (n - base)) - 1 : 0;
        if ((b.part1[w] | b.part2[w]) != expected)
            throw std::invalid_argument("bipartition parts do not cover the vertex set");
    }

    TriangleClassification out;
    std::vector<std::uint64_t> common(static_cast<std::size_t>(words));
    for (int u = 0; u < n; ++u) {
        const auto ru = g.row(u);
        g.for_each_neighbor(u, [&](int v) {
            if (v <= u) return;
            const auto rv = g.row(v);
            for (int w = 0; w < words; ++w) common[w] = ru[w] & rv[w];
            // keep only w > v so each triangle is classified once
            common[v >> 6] &= ~((std::uint64_t{2} << (v & 63)) - 1);
            for (int w = v >> 6; w < words; ++w) {
                std::uint64_t word = common[w];
                while (word != 0) {
                    const int x = w * 64 + std::countr_zero(word);
                    word &= word - 1;
                    const int in1 = (b.contains1(u) ? 1 : 0) + (b.contains1(v) ? 1 : 0) +
                                    (b.contains1(x) ? 1 : 0);
                    if (in1 == 3 || in1 == 0)
                        ++out.t3;
                    else if (in1 == 2)
                        ++out.t1;
                    else
                        ++out.t2;
                }
            }
        });
    }
    return out;
}

}  // namespace suspath
