#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace suspath {

namespace detail {

// Depth-first branch-and-bound over simple paths. A branch is abandoned when
// the current path length plus the number of vertices reachable from its
// endpoint through unvisited vertices cannot reach the target order. Twin
// vertices (equal open or closed neighborhoods) are interchangeable by an
// automorphism fixing everything else, so at every extension only the
// smallest unvisited member of a twin class is tried; this collapses the
// blowup on dense near-bipartite neighborhoods.
class PathFinder {
public:
    PathFinder(const Graph& g, int k)
        : g_(g),
          k_(k),
          words_(g.words_per_row()),
          visited_(static_cast<std::size_t>(words_), 0),
          reach_(static_cast<std::size_t>(words_), 0),
          frontier_(static_cast<std::size_t>(words_), 0),
          next_(static_cast<std::size_t>(words_), 0),
          use_twins_(g.vertex_count() >= 16) {
        if (use_twins_) build_twin_classes();
    }

    std::optional<std::vector<int>> run() {
        const int n = g_.vertex_count();
        path_.reserve(static_cast<std::size_t>(k_));
        for (int s = 0; s < n; ++s) {
            if (twin_deferred(s)) continue;
            if (extend(s)) return path_;
        }
        return std::nullopt;
    }

private:
    // Classes of identical rows (nonadjacent twins) and identical closed rows
    // (adjacent twins), members ascending. Grouped by sorting row keys.
    void build_twin_classes() {
        const int n = g_.vertex_count();
        open_class_.resize(n);
        closed_class_.resize(n);
        std::vector<std::uint64_t> closed(static_cast<std::size_t>(n) * words_);
        for (int v = 0; v < n; ++v) {
            const auto r = g_.row(v);
            std::copy(r.begin(), r.end(), closed.begin() + static_cast<std::size_t>(v) * words_);
            closed[static_cast<std::size_t>(v) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        }
        auto group = [&](auto key_of, std::vector<int>& class_of,
                         std::vector<std::vector<int>>& members) {
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                const std::uint64_t* ka = key_of(a);
                const std::uint64_t* kb = key_of(b);
                for (int w = 0; w < words_; ++w)
                    if (ka[w] != kb[w]) return ka[w] < kb[w];
                return a < b;
            });
            members.clear();
            for (int idx = 0; idx < n; ++idx) {
                const int v = order[idx];
                bool fresh = idx == 0;
                if (!fresh) {
                    const std::uint64_t* ka = key_of(order[idx - 1]);
                    const std::uint64_t* kb = key_of(v);
                    for (int w = 0; w < words_; ++w)
                        if (ka[w] != kb[w]) {
                            fresh = true;
                            break;
                        }
                }
                if (fresh) members.emplace_back();
                class_of[v] = static_cast<int>(members.size()) - 1;
                members.back().push_back(v);
            }
        };
        group([&](int v) { return g_.row(v).data(); }, open_class_, open_members_);
        group([&](int v) { return closed.data() + static_cast<std::size_t>(v) * words_; },
              closed_class_, closed_members_);
    }

    bool is_visited(int v) const { return (visited_[v >> 6] >> (v & 63)) & 1u; }

    // True when a smaller unvisited twin exists; its subtree subsumes v's.
    bool twin_deferred(int v) const {
        if (!use_twins_) return false;
        for (const int m : open_members_[open_class_[v]]) {
            if (m >= v) break;
            if (!is_visited(m)) return true;
        }
        for (const int m : closed_members_[closed_class_[v]]) {
            if (m >= v) break;
            if (!is_visited(m)) return true;
        }
        return false;
    }

    bool extend(int v) {
        path_.push_back(v);
        visited_[v >> 6] |= std::uint64_t{1} << (v & 63);
        if (static_cast<int>(path_.size()) == k_) return true;
        if (static_cast<int>(path_.size()) + reachable_from(v) >= k_) {
            const auto r = g_.row(v);
            for (int w = 0; w < words_; ++w) {
                std::uint64_t word = r[w] & ~visited_[w];
                while (word != 0) {
                    const int u = w * 64 + std::countr_zero(word);
                    word &= word - 1;
                    if (twin_deferred(u)) continue;
                    if (extend(u)) return true;
                }
            }
        }
        path_.pop_back();
        visited_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        return false;
    }

    // Vertices reachable from v through unvisited vertices, v excluded.
    int reachable_from(int v) {
        const auto rv = g_.row(v);
        bool any = false;
        for (int w = 0; w < words_; ++w) {
            frontier_[w] = rv[w] & ~visited_[w];
            reach_[w] = frontier_[w];
            any = any || frontier_[w] != 0;
        }
        while (any) {
            std::fill(next_.begin(), next_.end(), 0);
            for (int w = 0; w < words_; ++w) {
                std::uint64_t word = frontier_[w];
                while (word != 0) {
                    const int u = w * 64 + std::countr_zero(word);
                    word &= word - 1;
                    const auto ru = g_.row(u);
                    for (int x = 0; x < words_; ++x) next_[x] |= ru[x];
                }
            }
            any = false;
            for (int w = 0; w < words_; ++w) {
                frontier_[w] = next_[w] & ~visited_[w] & ~reach_[w];
                reach_[w] |= frontier_[w];
                any = any || frontier_[w] != 0;
            }
        }
        int count = 0;
        for (int w = 0; w < words_; ++w) count += std::popcount(reach_[w]);
        return count;
    }

    const Graph& g_;
    int k_;
    int words_;
    std::vector<std::uint64_t> visited_, reach_, frontier_, next_;
    std::vector<int> path_;
    bool use_twins_;
    std::vector<int> open_class_, closed_class_;
    std::vector<std::vector<int>> open_members_, closed_members_;
};

}  // namespace detail

/// Finds a (not necessarily induced) path on exactly k vertices, returned as
/// a vertex sequence, or nullopt if none exists. Exact. k > n yields nullopt.
inline std::optional<std::vector<int>> find_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("path order must be positive");
    if (k > g.vertex_count()) return std::nullopt;
    if (k == 1) return std::vector<int>{0};
    detail::PathFinder pf(g, k);
    return pf.run();
}

inline bool has_path(const Graph& g, int k) { return find_path(g, k).has_value(); }

/// Adds one apex vertex adjacent to every vertex of f. The input graph is
/// preserved as the induced subgraph on the original indices; the apex gets
/// the last index.
inline Graph suspension(const Graph& f) {
    const int n = f.vertex_count();
    if (n + 1 > Graph::max_vertices)
        throw std::invalid_argument("suspension would exceed the maximum order");
    Graph g(n + 1);
    for (int v = 0; v < n; ++v) {
        f.for_each_neighbor(v, [&](int w) {
            if (w > v) g.add_edge(v, w);
        });
        g.add_edge(v, n);
    }
    return g;
}

/// True iff the neighborhoods of all listed vertices induce subgraphs with no
/// path on k vertices. Callers use this for incremental freeness checks when
/// only the listed neighborhoods may have changed.
inline bool neighborhoods_pk_free(const Graph& g, int k, std::span<const int> vertices) {
    for (const int v : vertices) {
        if (g.degree(v) < k) continue;
        const InducedNeighborhood sub = neighborhood_induced(g, v);
        if (has_path(sub.graph, k)) return false;
    }
    return true;
}

/// The freeness criterion: a graph contains the suspension of a k-vertex path
/// iff some vertex's induced neighborhood contains a k-vertex path.
inline bool is_suspension_pk_free(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("suspension path order must be at least 2");
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < k) continue;
        const InducedNeighborhood sub = neighborhood_induced(g, v);
        if (has_path(sub.graph, k)) return false;
    }
    return true;
}

/// Certificate for a freeness failure: the offending center and a k-vertex
/// path inside its neighborhood, in original vertex labels.
struct SuspensionViolation {
    int center;
    std::vector<int> path;
};

inline std::optional<SuspensionViolation> find_suspension_violation(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("suspension path order must be at least 2");
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < k) continue;
        const InducedNeighborhood sub = neighborhood_induced(g, v);
        if (auto path = find_path(sub.graph, k)) {
            SuspensionViolation out;
            out.center = v;
            out.path.reserve(path->size());
            for (const int idx : *path) out.path.push_back(sub.vertices[idx]);
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace suspath
