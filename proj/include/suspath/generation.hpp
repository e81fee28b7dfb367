#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "paths.hpp"

namespace suspath {

struct SearchStats {
    std::uint64_t nodes = 0;         // accepted graphs across all levels
    std::uint64_t tested = 0;        // children examined
    std::uint64_t pruned_free = 0;   // children rejected by the freeness filter
    std::uint64_t pruned_canon = 0;  // children rejected by the augmentation rule
    double seconds = 0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes += o.nodes;
        tested += o.tested;
        pruned_free += o.pruned_free;
        pruned_canon += o.pruned_canon;
        return *this;
    }
};

namespace detail {

using Clock = std::chrono::steady_clock;

/// Isomorph-free exhaustive generation by vertex augmentation. Each graph on
/// m vertices is extended by a new vertex with every neighborhood subset; a
/// child is kept only when its new vertex is automorphism-equivalent to the
/// vertex the canonical labeling places last, and accepted children of one
/// parent are deduplicated by canonical form. Together these guarantee each
/// isomorphism class is visited exactly once.
///
/// With free_k > 0, children whose changed neighborhoods contain a path on
/// free_k vertices are discarded. The pruning is sound for enumerating all
/// such graphs because the property is hereditary under deleting vertices,
/// so the canonical parent chain of an admissible graph never leaves the
/// admissible set.
class AugmentationEnumerator {
public:
    AugmentationEnumerator(int target_n, int free_k, std::function<void(const Graph&)> visit,
                           Clock::time_point deadline, bool has_deadline)
        : target_n_(target_n),
          free_k_(free_k),
          visit_(std::move(visit)),
          deadline_(deadline),
          has_deadline_(has_deadline) {}

    SearchStats stats;

    bool expired() const { return expired_; }

    void extend(const Graph& g) {
        if (expired_) return;
        if (has_deadline_ && Clock::now() >= deadline_) {
            expired_ = true;
            return;
        }
        ++stats.nodes;
        const int m = g.vertex_count();
        if (m == target_n_) {
            visit_(g);
            return;
        }
        // Template child with the new vertex still isolated; edges toggled
        // per subset below.
        Graph child(m + 1);
        for (int v = 0; v < m; ++v)
            g.for_each_neighbor(v, [&](int w) {
                if (w > v) child.add_edge(v, w);
            });

        std::set<std::string> seen;  // accepted child forms under this parent
        std::vector<int> changed;
        changed.reserve(m + 1);
        const std::uint32_t limit = std::uint32_t{1} << m;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            ++stats.tested;
            changed.clear();
            changed.push_back(m);
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                child.add_edge(v, m);
                changed.push_back(v);
            }
            bool keep = true;
            if (free_k_ > 0) keep = neighborhoods_pk_free(child, free_k_, changed);
            if (!keep) {
                ++stats.pruned_free;
            } else {
                const CanonicalLabeling lab = canonical_labeling(child);
                int last_vertex = -1;
                for (int v = 0; v <= m; ++v)
                    if (lab.to_position[v] == m) {
                        last_vertex = v;
                        break;
                    }
                const bool canonical_child =
                    last_vertex == m || canonical_form_rooted(child, m) ==
                                            canonical_form_rooted(child, last_vertex);
                if (!canonical_child || !seen.insert(lab.form.bytes).second) {
                    ++stats.pruned_canon;
                } else {
                    extend(child);
                }
            }
            for (std::size_t i = 1; i < changed.size(); ++i) child.remove_edge(changed[i], m);
            if (expired_) return;
        }
    }

private:
    int target_n_;
    int free_k_;
    std::function<void(const Graph&)> visit_;
    Clock::time_point deadline_;
    bool has_deadline_;
    bool expired_ = false;
};

}  // namespace detail

struct EnumerationOptions {
    int n = 0;                  // target order
    int free_k = 0;             // 0 disables the freeness filter
    double budget_seconds = 0;  // 0 means unlimited
    int workers = 1;
};

/// Visits one representative of every isomorphism class of graphs on exactly
/// options.n vertices that satisfy the freeness filter. Returns true if the
/// enumeration ran to completion within the budget. With several workers the
/// visitor is called concurrently and must be thread-safe.
inline bool enumerate_classes(const EnumerationOptions& options,
                              const std::function<void(const Graph&)>& visit,
                              SearchStats& stats) {
    if (options.n < 0) throw std::invalid_argument("target order must be nonnegative");
    if (options.n + 0 > max_canonical_vertices)
        throw std::invalid_argument("enumeration limited to " +
                                    std::to_string(max_canonical_vertices) + " vertices");
    const auto t0 = detail::Clock::now();
    const bool has_deadline = options.budget_seconds > 0;
    const auto deadline =
        has_deadline ? t0 + std::chrono::duration_cast<detail::Clock::duration>(
                                std::chrono::duration<double>(options.budget_seconds))
                     : detail::Clock::time_point::max();

    bool completed = true;
    if (options.n == 0) {
        visit(Graph(0));
        stats.nodes += 1;
    } else if (options.workers <= 1 || options.n < 4) {
        detail::AugmentationEnumerator en(options.n, options.free_k, visit, deadline, has_deadline);
        en.extend(Graph(1));
        stats += en.stats;
        completed = !en.expired();
    } else {
        // Collect a frontier a few levels down, then run the disjoint
        // subtrees on a small pool. Subtrees are independent, so results and
        // stats merge exactly.
        const int split = std::min(options.n - 1, 6);
        std::vector<Graph> frontier;
        detail::AugmentationEnumerator seed(
            split, options.free_k, [&](const Graph& g) { frontier.push_back(g); }, deadline,
            has_deadline);
        seed.extend(Graph(1));
        stats += seed.stats;
        stats.nodes -= frontier.size();  // frontier nodes are recounted by the workers
        if (seed.expired()) {
            completed = false;
        } else {
            std::atomic<std::size_t> next{0};
            std::atomic<bool> any_expired{false};
            std::mutex stats_mutex;
            auto work = [&]() {
                SearchStats local;
                for (;;) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= frontier.size()) break;
                    detail::AugmentationEnumerator en(options.n, options.free_k, visit, deadline,
                                                      has_deadline);
                    en.extend(frontier[idx]);
                    local += en.stats;
                    if (en.expired()) {
                        any_expired = true;
                        break;
                    }
                }
                const std::lock_guard<std::mutex> lock(stats_mutex);
                stats += local;
            };
            std::vector<std::thread> pool;
            const int nworkers = std::min<int>(options.workers, static_cast<int>(frontier.size()));
            pool.reserve(nworkers);
            for (int t = 0; t < nworkers; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
            completed = !any_expired.load();
        }
    }
    stats.seconds += std::chrono::duration<double>(detail::Clock::now() - t0).count();
    return completed;
}

/// Number of isomorphism classes of graphs on n vertices.
inline std::uint64_t count_isomorphism_classes(int n) {
    EnumerationOptions opt;
    opt.n = n;
    std::uint64_t count = 0;
    SearchStats stats;
    enumerate_classes(opt, [&](const Graph&) { ++count; }, stats);
    return count;
}

}  // namespace suspath
